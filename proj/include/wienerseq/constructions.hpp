#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wienerseq/distance_sequence.hpp"
#include "wienerseq/errors.hpp"
#include "wienerseq/graph.hpp"

namespace wienerseq {

inline Graph complete(std::size_t n) {
  if (n < 1) throw DomainError("complete graph needs n >= 1");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

inline Graph path(std::size_t n) {
  if (n < 1) throw DomainError("path needs n >= 1");
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
  return g;
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw DomainError("cycle needs n >= 3, got " + std::to_string(n));
  Graph g = path(n);
  g.add_edge(0, static_cast<Vertex>(n - 1));
  return g;
}

/// Center 0, leaves 1..n-1.
inline Graph star(std::size_t n) {
  if (n < 1) throw DomainError("star needs n >= 1");
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) g.add_edge(0, v);
  return g;
}

// ---------------------------------------------------------------------------
// path-complete graphs

/// Canonical parameters of the path-complete graph of order n and size m:
/// a clique on `clique` vertices, a path on the remaining n - clique
/// vertices, and `attachments` edges from the first path vertex into the
/// clique, with 1 <= attachments <= clique - 1. The complete graph is the
/// special case clique = n, attachments = 0.
struct PathCompleteShape {
  std::size_t clique = 0;
  std::size_t attachments = 0;

  friend bool operator==(const PathCompleteShape&, const PathCompleteShape&) = default;
};

inline PathCompleteShape path_complete_shape(std::size_t n, std::size_t m) {
  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  if (n < 1 || m + 1 < n || m > pairs) {
    throw DomainError("path-complete graph needs n-1 <= m <= n(n-1)/2; got n=" +
                      std::to_string(n) + ", m=" + std::to_string(m));
  }
  if (m == pairs) return {n, 0};
  // Size of the (q, t) graph is C(q,2) + (n-q-1) + t; the ranges for
  // consecutive q tile [n-1, C(n,2)-1] without overlap.
  for (std::size_t q = 2; q < n; ++q) {
    const std::size_t base = q * (q - 1) / 2 + (n - q - 1);
    if (m >= base + 1 && m <= base + q - 1) return {q, m - base};
  }
  throw DomainError("no path-complete shape for n=" + std::to_string(n) + ", m=" + std::to_string(m));
}

/// Clique vertices 0..q-1, path vertices q..n-1 in order; vertex q is
/// joined to clique vertices 0..t-1.
inline Graph path_complete(std::size_t n, std::size_t m) {
  const auto shape = path_complete_shape(n, m);
  if (shape.clique == n) return complete(n);
  Graph g(n);
  const auto q = static_cast<Vertex>(shape.clique);
  for (Vertex u = 0; u < q; ++u) {
    for (Vertex v = u + 1; v < q; ++v) g.add_edge(u, v);
  }
  for (Vertex v = q + 1; v < n; ++v) g.add_edge(v - 1, v);
  for (Vertex u = 0; u < shape.attachments; ++u) g.add_edge(u, q);
  if (g.size() != m) throw Error("path_complete built " + std::to_string(g.size()) + " edges, wanted " + std::to_string(m));
  return g;
}

// ---------------------------------------------------------------------------
// powers of paths and cycles

/// C_n^h; with h = kappa/2 this is the extremal kappa-connected graph.
inline Graph cycle_power(std::size_t n, std::size_t h) {
  if (n < 3 || h < 1) throw DomainError("cycle_power needs n >= 3 and h >= 1");
  return graph_power(cycle(n), h);
}

inline Graph path_power(std::size_t n, std::size_t k) {
  if (k < 1 || k + 1 > n) throw DomainError("path_power needs 1 <= k <= n-1");
  return graph_power(path(n), k);
}

/// Distances from an end vertex of P_n^k: 1..s each k times, then s+1
/// repeated n-1-sk times, where s = floor((n-1)/k).
inline DistanceSequence end_vertex_sequence_path_power(std::size_t n, std::size_t k) {
  if (k < 1 || k + 1 > n) throw DomainError("end_vertex_sequence_path_power needs 1 <= k <= n-1");
  const std::size_t s = (n - 1) / k;
  std::vector<DistanceSequence::Run> runs;
  for (std::size_t d = 1; d <= s; ++d) runs.push_back({static_cast<std::uint32_t>(d), k});
  runs.push_back({static_cast<std::uint32_t>(s + 1), n - 1 - s * k});
  return DistanceSequence::from_runs(runs);
}

// ---------------------------------------------------------------------------
// odd trees

/// T_n: spine 0..n/2 with one leaf hung on each internal spine vertex
/// (leaves numbered by spine position); T_4 is the star S_4.
inline Graph odd_caterpillar(std::size_t n) {
  if (n % 2 != 0 || n < 4) throw DomainError("odd_caterpillar needs even n >= 4, got " + std::to_string(n));
  if (n == 4) return star(4);
  const std::size_t spine = n / 2 + 1;
  Graph g = path(spine);
  Graph out(n);
  for (const auto& e : g.edges()) out.add_edge(e.u, e.v);
  Vertex leaf = static_cast<Vertex>(spine);
  for (Vertex s = 1; s + 1 < spine; ++s) out.add_edge(s, leaf++);
  return out;
}

/// (1^2, 2^3, 3^4, ..., (n/2)^4): the entries D(T_n) gains over D(T_{n-2}).
inline DistanceSequence odd_caterpillar_increment(std::size_t n) {
  if (n % 2 != 0 || n < 6) {
    throw DomainError("odd_caterpillar_increment needs even n >= 6, got " + std::to_string(n));
  }
  std::vector<DistanceSequence::Run> runs{{1, 2}, {2, 3}};
  for (std::uint32_t d = 3; d <= n / 2; ++d) runs.push_back({d, 4});
  return DistanceSequence::from_runs(runs);
}

// ---------------------------------------------------------------------------
// family specs

enum class Family { PathComplete, CyclePower, PathPower, OddCaterpillar, Star, Path, Cycle, Complete };

struct FamilySpec {
  Family family = Family::Path;
  std::size_t n = 0;
  std::size_t param = 0;  // m, h or k for the two-parameter families

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

namespace detail {

struct FamilyName {
  std::string_view name;
  Family family;
  bool two_params;
};

inline constexpr FamilyName kFamilyNames[] = {
    {"pk", Family::PathComplete, true},   {"cyclepow", Family::CyclePower, true},
    {"pathpow", Family::PathPower, true}, {"oddcat", Family::OddCaterpillar, false},
    {"star", Family::Star, false},        {"path", Family::Path, false},
    {"cycle", Family::Cycle, false},      {"complete", Family::Complete, false},
};

inline std::size_t parse_count(std::string_view text, std::string_view whole) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos || text.size() > 9) {
    throw ParseError("family \"" + std::string(whole) + "\": bad number \"" + std::string(text) + "\"");
  }
  return std::stoul(std::string(text));
}

}  // namespace detail

/// Parses "pk:n,m", "cyclepow:n,h", "pathpow:n,k", "oddcat:n", "star:n",
/// "path:n", "cycle:n", "complete:n".
inline FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("family \"" + std::string(text) + "\": missing ':'");
  const auto name = text.substr(0, colon);
  const auto args = text.substr(colon + 1);
  for (const auto& f : detail::kFamilyNames) {
    if (f.name != name) continue;
    const auto comma = args.find(',');
    if (f.two_params != (comma != std::string_view::npos)) {
      throw ParseError("family \"" + std::string(text) + "\": wrong number of parameters");
    }
    FamilySpec spec{f.family, detail::parse_count(args.substr(0, comma), text), 0};
    if (f.two_params) spec.param = detail::parse_count(args.substr(comma + 1), text);
    return spec;
  }
  throw ParseError("unknown family \"" + std::string(name) + "\"");
}

inline std::string to_string(const FamilySpec& spec) {
  for (const auto& f : detail::kFamilyNames) {
    if (f.family == spec.family) {
      std::string out = std::string(f.name) + ":" + std::to_string(spec.n);
      if (f.two_params) out += "," + std::to_string(spec.param);
      return out;
    }
  }
  return "?";
}

inline Graph build(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::PathComplete: return path_complete(spec.n, spec.param);
    case Family::CyclePower: return cycle_power(spec.n, spec.param);
    case Family::PathPower: return path_power(spec.n, spec.param);
    case Family::OddCaterpillar: return odd_caterpillar(spec.n);
    case Family::Star: return star(spec.n);
    case Family::Path: return path(spec.n);
    case Family::Cycle: return cycle(spec.n);
    case Family::Complete: return complete(spec.n);
  }
  throw DomainError("unknown family");
}

}  // namespace wienerseq
