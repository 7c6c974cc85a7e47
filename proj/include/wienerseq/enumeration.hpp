#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "wienerseq/canonical.hpp"
#include "wienerseq/errors.hpp"
#include "wienerseq/graph.hpp"

namespace wienerseq {

enum class Dedup { Labeled, Unlabeled };

/// Work partitioning for enumeration and verification. `shards` fixes how
/// the work is split; `jobs` is the number of worker threads. Results do not
/// depend on either.
struct ShardOptions {
  std::size_t shards = 1;
  std::size_t jobs = 1;
};

// Supported orders per class.
inline constexpr std::size_t kMaxConnectedOrder = 8;
inline constexpr std::size_t kMaxLabeledOrder = 7;
inline constexpr std::size_t kMaxDegenerateFilterOrder = 7;
inline constexpr std::size_t kMaxTreeOrder = 16;
inline constexpr std::size_t kMaxKTreeOrder = 10;
inline constexpr std::size_t kMaxApollonianOrder = 11;
inline constexpr std::size_t kMaxOddTreeOrder = 14;
inline constexpr std::size_t kMaxPlanarOrder = 9;

namespace detail {

/// Calls work(s) for every shard s in [0, shards) using up to `jobs`
/// threads. Each shard writes only to its own slot.
inline void run_shards(const ShardOptions& opts, const std::function<void(std::size_t)>& work) {
  const std::size_t shards = std::max<std::size_t>(1, opts.shards);
  const std::size_t jobs = std::clamp<std::size_t>(opts.jobs, 1, shards);
  if (jobs == 1) {
    for (std::size_t s = 0; s < shards; ++s) work(s);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> pool;
  for (std::size_t j = 0; j < jobs; ++j) {
    pool.emplace_back([&, j] {
      try {
        for (std::size_t s = next++; s < shards; s = next++) work(s);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

using Emit = std::function<void(const Graph&)>;

/// Applies `extend` to every parent, canonicalizes each emitted child and
/// returns the distinct canonical children sorted by certificate. Parents
/// are dealt round-robin to shards; each shard deduplicates locally and the
/// shard sets are merged.
inline std::vector<Graph> extend_unlabeled(const std::vector<Graph>& parents,
                                           const std::function<void(const Graph&, const Emit&)>& extend,
                                           const ShardOptions& opts) {
  const std::size_t shards = std::max<std::size_t>(1, opts.shards);
  std::vector<std::set<std::string>> found(shards);
  run_shards(opts, [&](std::size_t s) {
    for (std::size_t i = s; i < parents.size(); i += shards) {
      extend(parents[i], [&](const Graph& child) { found[s].insert(canonical_form(child).certificate); });
    }
  });
  std::set<std::string> merged;
  for (auto& f : found) merged.merge(f);
  std::vector<Graph> out;
  out.reserve(merged.size());
  for (const auto& cert : merged) out.push_back(parse_graph6(cert));
  return out;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

/// All nonempty neighbor sets for a new vertex.
inline void extend_by_vertex(const Graph& parent, const Emit& emit) {
  const std::size_t n = parent.order();
  std::vector<Vertex> targets;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    targets.clear();
    for (Vertex v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) targets.push_back(v);
    }
    emit(parent.with_new_vertex(targets));
  }
}

inline std::vector<Graph> connected_unlabeled(std::size_t n, const ShardOptions& opts) {
  // Every connected graph has a non-cut vertex, so each one arises from a
  // connected graph on n-1 vertices plus a vertex with at least one neighbor.
  std::vector<Graph> level{Graph(1)};
  for (std::size_t order = 2; order <= n; ++order) level = extend_unlabeled(level, extend_by_vertex, opts);
  return level;
}

inline std::vector<Graph> connected_labeled(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) pairs.push_back({i, j});
  }
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    if (std::popcount(mask) + 1 < static_cast<int>(n)) continue;
    Graph g(n);
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if ((mask >> b) & 1U) g.add_edge(pairs[b].u, pairs[b].v);
    }
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

/// Every k-subset of vertices that induces a clique.
inline std::vector<std::vector<Vertex>> cliques_of_size(const Graph& g, std::size_t k) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> current;
  std::function<void(Vertex)> grow = [&](Vertex from) {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (Vertex v = from; v < g.order(); ++v) {
      if (std::all_of(current.begin(), current.end(), [&](Vertex u) { return g.has_edge(u, v); })) {
        current.push_back(v);
        grow(v + 1);
        current.pop_back();
      }
    }
  };
  grow(0);
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// general connected graphs

/// Connected graphs of order n (and size m when given). Unlabeled results
/// are canonical graphs sorted by certificate; labeled results come in
/// edge-mask order.
inline std::vector<Graph> enumerate_connected(std::size_t n, std::optional<std::size_t> m = std::nullopt,
                                              Dedup dedup = Dedup::Unlabeled, const ShardOptions& opts = {}) {
  detail::require(n >= 2 && n <= kMaxConnectedOrder,
                  "enumerate_connected supports 2 <= n <= " + std::to_string(kMaxConnectedOrder));
  detail::require(dedup == Dedup::Unlabeled || n <= kMaxLabeledOrder,
                  "labeled enumeration supports n <= " + std::to_string(kMaxLabeledOrder));
  auto all = dedup == Dedup::Unlabeled ? detail::connected_unlabeled(n, opts) : detail::connected_labeled(n);
  if (m) std::erase_if(all, [&](const Graph& g) { return g.size() != *m; });
  return all;
}

inline std::vector<Graph> enumerate_k_connected(std::size_t n, std::size_t kappa, Dedup dedup = Dedup::Unlabeled,
                                                const ShardOptions& opts = {}) {
  detail::require(kappa >= 1 && kappa < n, "enumerate_k_connected needs 1 <= kappa < n");
  auto all = enumerate_connected(n, std::nullopt, dedup, opts);
  std::erase_if(all, [&](const Graph& g) { return vertex_connectivity(g) < kappa; });
  return all;
}

// ---------------------------------------------------------------------------
// k-trees and maximal k-degenerate graphs

/// Unlabeled k-trees: start from K_{k+1} and join a new vertex to every
/// k-clique, rejecting isomorphic duplicates at each order.
inline std::vector<Graph> enumerate_k_trees(std::size_t n, std::size_t k, const ShardOptions& opts = {}) {
  const std::size_t ceiling = k == 1 ? kMaxTreeOrder : kMaxKTreeOrder;
  detail::require(k >= 1 && k + 1 <= n && n <= ceiling,
                  "enumerate_k_trees needs k >= 1 and k+1 <= n <= " + std::to_string(ceiling));
  Graph base(k + 1);
  for (Vertex u = 0; u <= k; ++u) {
    for (Vertex v = u + 1; v <= k; ++v) base.add_edge(u, v);
  }
  std::vector<Graph> level{canonical_graph(base)};
  auto extend = [k](const Graph& parent, const detail::Emit& emit) {
    for (const auto& clique : detail::cliques_of_size(parent, k)) emit(parent.with_new_vertex(clique));
  };
  for (std::size_t order = k + 2; order <= n; ++order) level = detail::extend_unlabeled(level, extend, opts);
  return level;
}

inline std::vector<Graph> enumerate_maximal_k_degenerate(std::size_t n, std::size_t k, const ShardOptions& opts = {}) {
  detail::require(k >= 1 && n >= 2 && n <= kMaxDegenerateFilterOrder,
                  "enumerate_maximal_k_degenerate needs k >= 1 and 2 <= n <= " +
                      std::to_string(kMaxDegenerateFilterOrder));
  auto all = enumerate_connected(n, std::nullopt, Dedup::Unlabeled, opts);
  std::erase_if(all, [&](const Graph& g) {
    const auto r = degeneracy_check(g, k);
    return !(r.is_k_degenerate && r.is_maximal);
  });
  return all;
}

inline std::vector<Graph> enumerate_odd_trees(std::size_t n, const ShardOptions& opts = {}) {
  if (n % 2 != 0) throw DomainError("odd trees have even order; got n=" + std::to_string(n));
  detail::require(n >= 4 && n <= kMaxOddTreeOrder,
                  "enumerate_odd_trees supports even 4 <= n <= " + std::to_string(kMaxOddTreeOrder));
  auto trees = enumerate_k_trees(n, 1, opts);
  std::erase_if(trees, [](const Graph& t) { return !is_odd_tree(t); });
  return trees;
}

// ---------------------------------------------------------------------------
// triangulations: Apollonian networks and maximal planar graphs

using Face = std::array<Vertex, 3>;

/// A triangulated sphere: the graph plus its facial triangles (each stored
/// sorted; the list is sorted).
struct Triangulation {
  Graph graph;
  std::vector<Face> faces;
};

namespace detail {

inline Face sorted_face(Vertex a, Vertex b, Vertex c) {
  Face f{a, b, c};
  std::sort(f.begin(), f.end());
  return f;
}

inline Triangulation canonical_triangulation(const Triangulation& t) {
  const auto perm = canonical_labeling(t.graph);
  Triangulation out{t.graph.relabeled(perm), {}};
  for (const auto& f : t.faces) out.faces.push_back(sorted_face(perm[f[0]], perm[f[1]], perm[f[2]]));
  std::sort(out.faces.begin(), out.faces.end());
  return out;
}

using EmitTriangulation = std::function<void(const Triangulation&)>;

/// Deduplicates triangulations by graph certificate. A triangulation of
/// order >= 4 is 3-connected, so its faces are determined by its graph and
/// any representative carries the same face set after canonical relabeling.
inline std::vector<Triangulation> extend_triangulations(
    const std::vector<Triangulation>& parents,
    const std::function<void(const Triangulation&, const EmitTriangulation&)>& extend, const ShardOptions& opts) {
  const std::size_t shards = std::max<std::size_t>(1, opts.shards);
  std::vector<std::map<std::string, Triangulation>> found(shards);
  run_shards(opts, [&](std::size_t s) {
    for (std::size_t i = s; i < parents.size(); i += shards) {
      extend(parents[i], [&](const Triangulation& child) {
        auto canon = canonical_triangulation(child);
        auto cert = write_graph6(canon.graph);
        found[s].try_emplace(std::move(cert), std::move(canon));
      });
    }
  });
  std::map<std::string, Triangulation> merged;
  for (auto& f : found) merged.merge(f);
  std::vector<Triangulation> out;
  out.reserve(merged.size());
  for (auto& [cert, t] : merged) out.push_back(std::move(t));
  return out;
}

/// Inserts a new vertex into face `i`, joining it to the face's corners.
inline Triangulation insert_into_face(const Triangulation& t, std::size_t i) {
  const Face f = t.faces[i];
  const std::vector<Vertex> corners(f.begin(), f.end());
  const auto x = static_cast<Vertex>(t.graph.order());
  Triangulation out{t.graph.with_new_vertex(corners), t.faces};
  out.faces[i] = sorted_face(f[0], f[1], x);
  out.faces.push_back(sorted_face(f[0], f[2], x));
  out.faces.push_back(sorted_face(f[1], f[2], x));
  return out;
}

inline std::vector<Triangulation> apollonian_triangulations(std::size_t n, const ShardOptions& opts) {
  Graph triangle(3);
  triangle.add_edge(0, 1);
  triangle.add_edge(0, 2);
  triangle.add_edge(1, 2);
  std::vector<Triangulation> level{{triangle, {Face{0, 1, 2}, Face{0, 1, 2}}}};
  auto extend = [](const Triangulation& parent, const EmitTriangulation& emit) {
    for (std::size_t i = 0; i < parent.faces.size(); ++i) emit(insert_into_face(parent, i));
  };
  for (std::size_t order = 4; order <= n; ++order) level = extend_triangulations(level, extend, opts);
  return level;
}

/// Every triangulation reachable from `t` by one diagonal flip. Edge uv
/// with faces uvw and uvx becomes wx with faces wxu and wxv, provided w and
/// x are not already adjacent.
inline void flip_neighbors(const Triangulation& t, const EmitTriangulation& emit) {
  std::map<std::pair<Vertex, Vertex>, std::vector<std::size_t>> faces_of_edge;
  for (std::size_t i = 0; i < t.faces.size(); ++i) {
    const auto& f = t.faces[i];
    faces_of_edge[{f[0], f[1]}].push_back(i);
    faces_of_edge[{f[0], f[2]}].push_back(i);
    faces_of_edge[{f[1], f[2]}].push_back(i);
  }
  for (const auto& [edge, incident] : faces_of_edge) {
    if (incident.size() != 2) continue;
    const auto [u, v] = edge;
    auto apex = [&](std::size_t i) {
      for (Vertex c : t.faces[i]) {
        if (c != u && c != v) return c;
      }
      return u;
    };
    const Vertex w = apex(incident[0]);
    const Vertex x = apex(incident[1]);
    if (w == x || t.graph.has_edge(w, x)) continue;
    Graph g(t.graph.order());
    for (const auto& e : t.graph.edges()) {
      if (!(e.u == u && e.v == v)) g.add_edge(e.u, e.v);
    }
    g.add_edge(w, x);
    Triangulation out{std::move(g), t.faces};
    out.faces[incident[0]] = sorted_face(w, x, u);
    out.faces[incident[1]] = sorted_face(w, x, v);
    emit(out);
  }
}

}  // namespace detail

inline std::vector<Graph> enumerate_apollonian(std::size_t n, const ShardOptions& opts = {}) {
  detail::require(n >= 3 && n <= kMaxApollonianOrder,
                  "enumerate_apollonian supports 3 <= n <= " + std::to_string(kMaxApollonianOrder));
  std::vector<Graph> out;
  for (auto& t : detail::apollonian_triangulations(n, opts)) out.push_back(std::move(t.graph));
  return out;
}

enum class PlanarMode {
  FlipClosure,     // Apollonian seeds closed under diagonal flips: every triangulation
  ApollonianOnly,  // only the planar 3-trees
};

enum class Coverage { Complete, Partial };

inline std::string_view to_string(Coverage c) { return c == Coverage::Complete ? "complete" : "partial"; }

struct PlanarEnumeration {
  std::vector<Graph> graphs;
  Coverage coverage = Coverage::Complete;
  std::size_t apollonian_count = 0;
};

/// Maximal planar graphs of order n. Any two triangulations of the sphere
/// with the same order are connected by diagonal flips, so closing the
/// Apollonian networks under flips reaches every one of them.
inline PlanarEnumeration enumerate_maximal_planar(std::size_t n, PlanarMode mode = PlanarMode::FlipClosure,
                                                  const ShardOptions& opts = {}) {
  detail::require(n >= 4 && n <= kMaxPlanarOrder,
                  "enumerate_maximal_planar supports 4 <= n <= " + std::to_string(kMaxPlanarOrder));
  auto seeds = detail::apollonian_triangulations(n, opts);
  PlanarEnumeration result;
  result.apollonian_count = seeds.size();
  if (mode == PlanarMode::ApollonianOnly) {
    result.coverage = Coverage::Partial;
    for (auto& t : seeds) result.graphs.push_back(std::move(t.graph));
    return result;
  }
  std::map<std::string, Triangulation> seen;
  for (auto& t : seeds) seen.emplace(write_graph6(t.graph), t);
  std::vector<Triangulation> frontier = std::move(seeds);
  while (!frontier.empty()) {
    auto next = detail::extend_triangulations(frontier, detail::flip_neighbors, opts);
    frontier.clear();
    for (auto& t : next) {
      auto cert = write_graph6(t.graph);
      if (seen.try_emplace(cert, t).second) frontier.push_back(std::move(t));
    }
  }
  for (auto& [cert, t] : seen) result.graphs.push_back(std::move(t.graph));
  result.coverage = Coverage::Complete;
  return result;
}

// ---------------------------------------------------------------------------
// class specs

enum class GraphClass { Connected, KConnected, KTree, MaximalKDegenerate, Apollonian, OddTree, MaximalPlanar };

struct EnumerationSpec {
  GraphClass graph_class = GraphClass::Connected;
  std::size_t n = 0;
  std::optional<std::size_t> param;  // m, kappa or k
  Dedup dedup = Dedup::Unlabeled;
  std::optional<std::size_t> limit;
};

namespace detail {

struct ClassName {
  std::string_view name;
  GraphClass graph_class;
  int min_params;
  int max_params;
};

inline constexpr ClassName kClassNames[] = {
    {"connected", GraphClass::Connected, 1, 2},
    {"k_connected", GraphClass::KConnected, 2, 2},
    {"k_tree", GraphClass::KTree, 2, 2},
    {"maximal_k_degenerate", GraphClass::MaximalKDegenerate, 2, 2},
    {"apollonian", GraphClass::Apollonian, 1, 1},
    {"odd_tree", GraphClass::OddTree, 1, 1},
    {"maximal_planar", GraphClass::MaximalPlanar, 1, 1},
};

}  // namespace detail

/// Parses "connected:n[,m]", "k_connected:n,kappa", "k_tree:n,k",
/// "maximal_k_degenerate:n,k", "apollonian:n", "odd_tree:n",
/// "maximal_planar:n".
inline EnumerationSpec parse_class(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("class \"" + std::string(text) + "\": missing ':'");
  const auto name = text.substr(0, colon);
  std::vector<std::size_t> params;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const auto tok = rest.substr(0, comma);
    if (tok.empty() || tok.size() > 9 || tok.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ParseError("class \"" + std::string(text) + "\": bad number \"" + std::string(tok) + "\"");
    }
    params.push_back(std::stoul(std::string(tok)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  for (const auto& c : detail::kClassNames) {
    if (c.name != name) continue;
    const auto count = static_cast<int>(params.size());
    if (count < c.min_params || count > c.max_params) {
      throw ParseError("class \"" + std::string(text) + "\": wrong number of parameters");
    }
    EnumerationSpec spec{c.graph_class, params[0], std::nullopt, Dedup::Unlabeled, std::nullopt};
    if (params.size() > 1) spec.param = params[1];
    return spec;
  }
  throw ParseError("unknown class \"" + std::string(name) + "\"");
}

inline std::string to_string(const EnumerationSpec& spec) {
  for (const auto& c : detail::kClassNames) {
    if (c.graph_class == spec.graph_class) {
      std::string out = std::string(c.name) + ":" + std::to_string(spec.n);
      if (spec.param) out += "," + std::to_string(*spec.param);
      return out;
    }
  }
  return "?";
}

struct EnumerationResult {
  std::vector<Graph> graphs;
  Coverage coverage = Coverage::Complete;
};

inline EnumerationResult enumerate(const EnumerationSpec& spec, const ShardOptions& opts = {}) {
  EnumerationResult r;
  const bool unlabeled_only = spec.graph_class != GraphClass::Connected && spec.graph_class != GraphClass::KConnected;
  if (unlabeled_only && spec.dedup == Dedup::Labeled) {
    throw DomainError("class " + to_string(spec) + " is only enumerated up to isomorphism");
  }
  switch (spec.graph_class) {
    case GraphClass::Connected: r.graphs = enumerate_connected(spec.n, spec.param, spec.dedup, opts); break;
    case GraphClass::KConnected: r.graphs = enumerate_k_connected(spec.n, *spec.param, spec.dedup, opts); break;
    case GraphClass::KTree: r.graphs = enumerate_k_trees(spec.n, *spec.param, opts); break;
    case GraphClass::MaximalKDegenerate: r.graphs = enumerate_maximal_k_degenerate(spec.n, *spec.param, opts); break;
    case GraphClass::Apollonian: r.graphs = enumerate_apollonian(spec.n, opts); break;
    case GraphClass::OddTree: r.graphs = enumerate_odd_trees(spec.n, opts); break;
    case GraphClass::MaximalPlanar: {
      auto p = enumerate_maximal_planar(spec.n, PlanarMode::FlipClosure, opts);
      r.graphs = std::move(p.graphs);
      r.coverage = p.coverage;
      break;
    }
  }
  if (spec.limit && r.graphs.size() > *spec.limit) r.graphs.resize(*spec.limit);
  return r;
}

}  // namespace wienerseq
