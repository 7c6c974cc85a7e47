#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wienerseq/errors.hpp"

namespace wienerseq {

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on the vertices 0..n-1.
///
/// Adjacency is held twice: sorted neighbor lists for traversal and a dense
/// bit matrix for O(1) edge queries. Self-loops, duplicate edges and
/// out-of-range endpoints are rejected by add_edge.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order)
      : n_(order), words_((order + 63) / 64), adj_(order), bits_(order * words_, 0) {}

  static Graph from_edges(std::size_t order, std::span<const Edge> edges) {
    Graph g(order);
    for (const auto& e : edges) g.add_edge(e.u, e.v);
    return g;
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return m_; }

  void add_edge(Vertex u, Vertex v) {
    if (u >= n_ || v >= n_) {
      throw DomainError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                        " has an endpoint outside 0.." +
                        std::to_string(n_ == 0 ? 0 : n_ - 1));
    }
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    if (has_edge(u, v)) {
      throw DomainError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    set_bit(u, v);
    set_bit(v, u);
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++m_;
  }

  bool has_edge(Vertex u, Vertex v) const noexcept {
    if (u >= n_ || v >= n_) return false;
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  /// Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.push_back({u, v});
      }
    }
    return out;
  }

  /// Graph with vertex v removed; vertices above v shift down by one.
  Graph without_vertex(Vertex v) const {
    if (v >= n_) throw DomainError("vertex " + std::to_string(v) + " out of range");
    Graph h(n_ - 1);
    auto shift = [v](Vertex x) { return x > v ? x - 1 : x; };
    for (const auto& e : edges()) {
      if (e.u != v && e.v != v) h.add_edge(shift(e.u), shift(e.v));
    }
    return h;
  }

  Graph with_edge(Vertex u, Vertex v) const {
    Graph h = *this;
    h.add_edge(u, v);
    return h;
  }

  /// Graph with an extra vertex n joined to every vertex in `targets`.
  Graph with_new_vertex(std::span<const Vertex> targets) const {
    Graph h(n_ + 1);
    for (const auto& e : edges()) h.add_edge(e.u, e.v);
    for (Vertex t : targets) h.add_edge(static_cast<Vertex>(n_), t);
    return h;
  }

  /// Relabels vertex v as perm[v]; perm must be a permutation of 0..n-1.
  Graph relabeled(std::span<const Vertex> perm) const {
    if (perm.size() != n_) throw DomainError("permutation length differs from graph order");
    std::vector<bool> seen(n_, false);
    for (Vertex p : perm) {
      if (p >= n_ || seen[p]) throw DomainError("relabeling is not a permutation");
      seen[p] = true;
    }
    Graph h(n_);
    for (const auto& e : edges()) h.add_edge(perm[e.u], perm[e.v]);
    return h;
  }

  /// Row v of the adjacency matrix as a 64-bit mask. Requires n <= 64.
  std::uint64_t row_mask(Vertex v) const {
    if (n_ > 64) throw DomainError("row_mask requires at most 64 vertices");
    return bits_.at(v);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.m_ == b.m_ && a.bits_ == b.bits_;
  }

 private:
  void set_bit(Vertex u, Vertex v) { bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::uint64_t> bits_;
};

// ---------------------------------------------------------------------------
// graph6

namespace detail {

inline std::size_t graph6_payload_chars(std::size_t n) {
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  return (bits + 5) / 6;
}

}  // namespace detail

/// Encodes g in graph6. The payload is the upper triangle of the adjacency
/// matrix read column by column, six bits per printable character.
inline std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + 63));
    }
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3F) + 63));
    }
  }
  int filled = 0;
  unsigned char acc = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = static_cast<unsigned char>((acc << 1) | (g.has_edge(i, j) ? 1 : 0));
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("graph6: empty record");
  for (char c : text) {
    const auto uc = static_cast<unsigned char>(c);
    if (uc < 63 || uc > 126) {
      throw ParseError("graph6: character code " + std::to_string(uc) + " outside 63..126");
    }
  }
  auto value = [&](std::size_t i) { return static_cast<std::size_t>(text[i]) - 63; };
  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = value(0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw ParseError("graph6: truncated length header");
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    if (n <= 62) throw ParseError("graph6: non-canonical length header");
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("graph6: truncated length header");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(i);
    if (n <= 258047) throw ParseError("graph6: non-canonical length header");
    pos = 8;
  }
  const std::size_t expected = detail::graph6_payload_chars(n);
  if (text.size() - pos != expected) {
    throw ParseError("graph6: payload has " + std::to_string(text.size() - pos) +
                     " characters, expected " + std::to_string(expected) + " for n=" +
                     std::to_string(n));
  }
  Graph g(n);
  std::size_t bit = 0;
  auto next_bit = [&]() {
    const std::size_t c = value(pos + bit / 6);
    const bool b = (c >> (5 - bit % 6)) & 1U;
    ++bit;
    return b;
  };
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (next_bit()) g.add_edge(i, j);
    }
  }
  while (bit < expected * 6) {
    if (next_bit()) throw ParseError("graph6: nonzero padding bits");
  }
  return g;
}

// ---------------------------------------------------------------------------
// edge list: first line n, then one "u v" pair per line

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Graph> g;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    auto fail = [&](const std::string& why) {
      return ParseError("edge list line " + std::to_string(lineno) + ": " + why);
    };
    if (!g) {
      long long n = -1;
      std::string rest;
      if (!(fields >> n) || (fields >> rest) || n < 0) throw fail("expected vertex count");
      g.emplace(static_cast<std::size_t>(n));
      continue;
    }
    long long u = -1;
    long long v = -1;
    std::string rest;
    if (!(fields >> u >> v) || (fields >> rest)) throw fail("expected \"u v\"");
    const auto n = static_cast<long long>(g->order());
    if (u < 0 || v < 0 || u >= n || v >= n) throw fail("vertex out of range 0.." + std::to_string(n - 1));
    if (u == v) throw fail("self-loop at vertex " + std::to_string(u));
    if (g->has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      throw fail("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    g->add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!g) throw ParseError("edge list: missing vertex count");
  return *std::move(g);
}

inline std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (const auto& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// distances

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Breadth-first distances from `source`; unreachable vertices get kUnreachable.
inline std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::uint32_t> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

class DistanceMatrix {
 public:
  DistanceMatrix(std::size_t n, std::vector<std::uint32_t> entries)
      : n_(n), d_(std::move(entries)), ecc_(n, 0) {
    for (std::size_t u = 0; u < n_; ++u) {
      ecc_[u] = n_ == 0 ? 0 : *std::max_element(d_.begin() + u * n_, d_.begin() + (u + 1) * n_);
    }
  }

  std::size_t order() const noexcept { return n_; }
  std::uint32_t operator()(Vertex u, Vertex v) const { return d_[u * n_ + v]; }
  std::span<const std::uint32_t> row(Vertex u) const { return {d_.data() + u * n_, n_}; }
  std::uint32_t eccentricity(Vertex u) const { return ecc_.at(u); }
  std::uint32_t diameter() const {
    return ecc_.empty() ? 0 : *std::max_element(ecc_.begin(), ecc_.end());
  }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> d_;
  std::vector<std::uint32_t> ecc_;
};

/// All-pairs shortest-path distances by one BFS per vertex.
/// Throws DisconnectedGraphError naming an unreachable pair.
inline DistanceMatrix distance_matrix(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> d(n * n);
  for (Vertex u = 0; u < n; ++u) {
    auto row = bfs_distances(g, u);
    for (Vertex v = 0; v < n; ++v) {
      if (row[v] == kUnreachable) throw DisconnectedGraphError(u, v);
    }
    std::copy(row.begin(), row.end(), d.begin() + u * n);
  }
  return DistanceMatrix(n, std::move(d));
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreachable; });
}

namespace detail {

// Connectivity of g restricted to vertices with removed[v] == false.
inline bool connected_without(const Graph& g, const std::vector<char>& removed) {
  const std::size_t n = g.order();
  Vertex start = 0;
  while (start < n && removed[start]) ++start;
  if (start == n) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{start};
  seen[start] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!removed[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  const auto alive = static_cast<std::size_t>(std::count(removed.begin(), removed.end(), 0));
  return reached == alive;
}

}  // namespace detail

inline bool is_cut_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw DomainError("vertex " + std::to_string(v) + " out of range");
  std::vector<char> removed(g.order(), 0);
  removed[v] = 1;
  return !detail::connected_without(g, removed);
}

/// Largest k such that g has more than k vertices and no set of fewer than k
/// vertices disconnects it. Exhaustive search over vertex subsets by
/// increasing size; K_n yields n-1.
inline std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw DomainError("vertex_connectivity requires at least 2 vertices");
  if (!is_connected(g)) return 0;
  for (std::size_t s = 1; s + 2 <= n; ++s) {
    // Iterate over s-subsets in lexicographic order via a selector mask.
    std::vector<char> select(n, 0);
    std::fill(select.end() - static_cast<std::ptrdiff_t>(s), select.end(), 1);
    do {
      if (!detail::connected_without(g, select)) return s;
    } while (std::next_permutation(select.begin(), select.end()));
  }
  return n - 1;
}

struct DegeneracyResult {
  bool is_k_degenerate = false;
  bool is_maximal = false;

  friend bool operator==(const DegeneracyResult&, const DegeneracyResult&) = default;
};

namespace detail {

// Peels minimum-degree vertices (lowest label on ties) and reports whether
// the minimum degree ever exceeded k.
inline bool peel_is_k_degenerate(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::vector<char> gone(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    std::size_t best_deg = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < n; ++v) {
      if (!gone[v] && deg[v] < best_deg) {
        best = v;
        best_deg = deg[v];
      }
    }
    if (best_deg > k) return false;
    gone[best] = 1;
    for (Vertex w : g.neighbors(best)) {
      if (!gone[w]) --deg[w];
    }
  }
  return true;
}

}  // namespace detail

inline DegeneracyResult degeneracy_check(const Graph& g, std::size_t k) {
  if (g.order() == 0) throw DomainError("degeneracy_check requires at least 1 vertex");
  if (k == 0) throw DomainError("degeneracy_check requires k >= 1");
  DegeneracyResult r;
  r.is_k_degenerate = detail::peel_is_k_degenerate(g, k);
  if (!r.is_k_degenerate) return r;
  r.is_maximal = true;
  const auto n = static_cast<Vertex>(g.order());
  for (Vertex u = 0; u < n && r.is_maximal; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v) && detail::peel_is_k_degenerate(g.with_edge(u, v), k)) {
        r.is_maximal = false;
        break;
      }
    }
  }
  return r;
}

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

inline bool is_odd_tree(const Graph& g) {
  if (!is_tree(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) % 2 == 0) return false;
  }
  return true;
}

/// k-th power: same vertices, u~v iff 1 <= d(u,v) <= k.
inline Graph graph_power(const Graph& g, std::size_t k) {
  if (k == 0) throw DomainError("graph_power requires k >= 1");
  const auto d = distance_matrix(g);
  const auto n = static_cast<Vertex>(g.order());
  Graph h(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (d(u, v) <= k) h.add_edge(u, v);
    }
  }
  return h;
}

}  // namespace wienerseq
