#pragma once

// Deliberately naive reference implementations used as test oracles. They
// share nothing with the library beyond the Graph edge list.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "wienerseq/graph.hpp"

namespace oracle {

using wienerseq::Graph;
using wienerseq::Vertex;

inline constexpr std::uint32_t kInf = 1u << 30;

inline std::vector<std::vector<std::uint32_t>> adjacency(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::uint32_t>> a(n, std::vector<std::uint32_t>(n, 0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = 1;
  return a;
}

/// All-pairs distances by Floyd-Warshall; kInf for unreachable pairs.
inline std::vector<std::vector<std::uint32_t>> floyd_warshall(const Graph& g) {
  const std::size_t n = g.order();
  auto a = adjacency(g);
  std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (a[i][j]) d[i][j] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

/// Sorted list of all pairwise distances.
inline std::vector<std::uint32_t> distance_multiset(const Graph& g) {
  const auto d = floyd_warshall(g);
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) out.push_back(d[i][j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::uint32_t> vertex_distances(const Graph& g, Vertex v) {
  const auto d = floyd_warshall(g);
  std::vector<std::uint32_t> out;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (j != v) out.push_back(d[v][j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool connected_mask(const std::vector<std::vector<std::uint32_t>>& a, std::uint64_t alive) {
  if (alive == 0) return true;
  std::uint64_t seen = alive & (~alive + 1);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!((seen >> i) & 1U)) continue;
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[i][j] && ((alive >> j) & 1U) && !((seen >> j) & 1U)) {
          seen |= std::uint64_t{1} << j;
          grew = true;
        }
      }
    }
  }
  return seen == alive;
}

/// Smallest number of vertices whose removal disconnects g (n-1 for
/// complete graphs), by trying every vertex subset.
inline std::size_t connectivity(const Graph& g) {
  const std::size_t n = g.order();
  const auto a = adjacency(g);
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::size_t best = n - 1;
  for (std::uint64_t removed = 0; removed <= all; ++removed) {
    const auto k = static_cast<std::size_t>(__builtin_popcountll(removed));
    if (k >= best || n - k < 2) continue;
    if (!connected_mask(a, all & ~removed)) best = k;
  }
  return best;
}

/// Upper-triangle bit string of g under the relabeling perm (perm[v] = new label).
inline std::string bits_under(const std::vector<std::vector<std::uint32_t>>& a, const std::vector<Vertex>& perm) {
  const std::size_t n = a.size();
  std::vector<Vertex> inv(n);
  for (std::size_t v = 0; v < n; ++v) inv[perm[v]] = static_cast<Vertex>(v);
  std::string s;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) s.push_back(a[inv[i]][inv[j]] ? '1' : '0');
  }
  return s;
}

/// Canonical string: the lexicographically largest adjacency string over all
/// n! relabelings. (Any fixed extremum works as an invariant.)
inline std::string brute_canonical(const Graph& g) {
  const auto a = adjacency(g);
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::string best;
  do {
    auto s = bits_under(a, perm);
    if (s > best) best = std::move(s);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(g.order()) + ":" + best;
}

inline bool brute_isomorphic(const Graph& x, const Graph& y) {
  if (x.order() != y.order() || x.size() != y.size()) return false;
  std::vector<std::size_t> dx;
  std::vector<std::size_t> dy;
  for (Vertex v = 0; v < x.order(); ++v) {
    dx.push_back(x.degree(v));
    dy.push_back(y.degree(v));
  }
  std::sort(dx.begin(), dx.end());
  std::sort(dy.begin(), dy.end());
  if (dx != dy) return false;
  const auto ax = adjacency(x);
  const auto ay = adjacency(y);
  std::vector<Vertex> perm(x.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < perm.size() && ok; ++j) ok = ax[i][j] == ay[perm[i]][perm[j]];
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// All connected labeled graphs on n vertices (bitmask over the pairs).
inline std::vector<Graph> all_connected_labeled(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if ((mask >> b) & 1U) g.add_edge(pairs[b].first, pairs[b].second);
    }
    const auto d = floyd_warshall(g);
    if (std::all_of(d[0].begin(), d[0].end(), [](std::uint32_t x) { return x < kInf; })) out.push_back(std::move(g));
  }
  return out;
}

/// T_n written out directly: spine 0..n/2, leaf n/2+i hung on spine vertex i.
inline Graph odd_caterpillar(std::size_t n) {
  Graph g(n);
  if (n == 4) {
    for (Vertex v = 1; v < 4; ++v) g.add_edge(0, v);
    return g;
  }
  const std::size_t spine = n / 2 + 1;
  for (Vertex v = 1; v < spine; ++v) g.add_edge(v - 1, v);
  for (Vertex i = 1; i + 1 < spine; ++i) g.add_edge(i, static_cast<Vertex>(spine + i - 1));
  return g;
}

}  // namespace oracle
