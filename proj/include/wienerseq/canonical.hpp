#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "wienerseq/errors.hpp"
#include "wienerseq/graph.hpp"

namespace wienerseq {

inline constexpr std::size_t kCanonicalMaxOrder = 64;

/// Isomorphism-invariant certificate: the graph6 string of the canonically
/// relabeled graph. Two graphs are isomorphic iff their certificates match.
struct CanonicalForm {
  std::string certificate;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

namespace detail {

// Canonical labeling by partition refinement and individualization.
// Every node of the search tree refines an ordered partition with color
// refinement; non-discrete nodes branch on each vertex of their first
// non-singleton cell, skipping vertices that are twins of an already-tried
// vertex (swapping twins is an automorphism fixing the node). The
// certificate is the smallest adjacency bit string over all leaves.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : n_(g.order()), adj_(g.order()) {
    if (n_ > kCanonicalMaxOrder) {
      throw DomainError("canonical form supports at most 64 vertices, got " + std::to_string(n_));
    }
    for (Vertex v = 0; v < n_; ++v) adj_[v] = g.row_mask(v);
  }

  /// order[p] is the vertex placed at position p.
  std::vector<Vertex> run() {
    if (n_ == 0) return {};
    Partition root;
    root.push_back({});
    for (Vertex v = 0; v < n_; ++v) root[0].push_back(v);
    refine(root);
    search(root);
    return best_order_;
  }

 private:
  using Cell = std::vector<Vertex>;
  using Partition = std::vector<Cell>;

  void refine(Partition& p) const {
    std::vector<std::uint64_t> cell_mask;
    while (true) {
      const std::size_t cells = p.size();
      cell_mask.assign(cells, 0);
      for (std::size_t c = 0; c < cells; ++c) {
        for (Vertex v : p[c]) cell_mask[c] |= std::uint64_t{1} << v;
      }
      Partition next;
      next.reserve(n_);
      for (const auto& cell : p) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        // Signature of v: neighbor counts in every current cell.
        auto sig = [&](Vertex v, std::size_t c) {
          return static_cast<std::uint32_t>(std::popcount(adj_[v] & cell_mask[c]));
        };
        Cell sorted = cell;
        std::stable_sort(sorted.begin(), sorted.end(), [&](Vertex a, Vertex b) {
          for (std::size_t c = 0; c < cells; ++c) {
            const auto sa = sig(a, c);
            const auto sb = sig(b, c);
            if (sa != sb) return sa < sb;
          }
          return false;
        });
        auto same = [&](Vertex a, Vertex b) {
          for (std::size_t c = 0; c < cells; ++c) {
            if (sig(a, c) != sig(b, c)) return false;
          }
          return true;
        };
        Cell current{sorted[0]};
        for (std::size_t i = 1; i < sorted.size(); ++i) {
          if (same(sorted[i - 1], sorted[i])) {
            current.push_back(sorted[i]);
          } else {
            next.push_back(std::move(current));
            current = {sorted[i]};
          }
        }
        next.push_back(std::move(current));
      }
      const bool stable = next.size() == p.size();
      p = std::move(next);
      if (stable) return;
    }
  }

  bool twins(Vertex a, Vertex b) const {
    const std::uint64_t ba = std::uint64_t{1} << a;
    const std::uint64_t bb = std::uint64_t{1} << b;
    return (adj_[a] & ~bb) == (adj_[b] & ~ba);
  }

  void search(const Partition& p) {
    const auto target = std::find_if(p.begin(), p.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == p.end()) {
      leaf(p);
      return;
    }
    const auto index = static_cast<std::size_t>(target - p.begin());
    std::vector<Vertex> tried;
    for (Vertex v : *target) {
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(u, v); })) continue;
      tried.push_back(v);
      Partition child;
      child.reserve(p.size() + 1);
      child.insert(child.end(), p.begin(), p.begin() + static_cast<std::ptrdiff_t>(index));
      child.push_back({v});
      Cell rest;
      for (Vertex w : *target) {
        if (w != v) rest.push_back(w);
      }
      child.push_back(std::move(rest));
      child.insert(child.end(), p.begin() + static_cast<std::ptrdiff_t>(index) + 1, p.end());
      refine(child);
      search(child);
    }
  }

  void leaf(const Partition& p) {
    std::vector<Vertex> order(n_);
    for (std::size_t i = 0; i < n_; ++i) order[i] = p[i][0];
    // Column-wise upper-triangle bits, most significant first.
    std::vector<std::uint64_t> bits((n_ * (n_ - 1) / 2 + 63) / 64 + 1, 0);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n_; ++j) {
      const std::uint64_t row = adj_[order[j]];
      for (std::size_t i = 0; i < j; ++i, ++k) {
        if ((row >> order[i]) & 1U) bits[k / 64] |= std::uint64_t{1} << (63 - k % 64);
      }
    }
    if (best_order_.empty() || bits < best_bits_) {
      best_bits_ = std::move(bits);
      best_order_ = std::move(order);
    }
  }

  std::size_t n_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint64_t> best_bits_;
  std::vector<Vertex> best_order_;
};

}  // namespace detail

/// Permutation perm with perm[v] = canonical label of v.
inline std::vector<Vertex> canonical_labeling(const Graph& g) {
  const auto order = detail::CanonicalSearch(g).run();
  std::vector<Vertex> perm(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) perm[order[p]] = static_cast<Vertex>(p);
  return perm;
}

inline Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_labeling(g)); }

inline CanonicalForm canonical_form(const Graph& g) { return {write_graph6(canonical_graph(g))}; }

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace wienerseq
