#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wienerseq/errors.hpp"
#include "wienerseq/graph.hpp"

namespace wienerseq {

/// Nondecreasing sequence of positive distances, stored run-length
/// compressed. Positional access is O(log runs).
class DistanceSequence {
 public:
  struct Run {
    std::uint32_t value;
    std::uint64_t count;

    friend bool operator==(const Run&, const Run&) = default;
  };

  DistanceSequence() = default;

  static DistanceSequence from_entries(std::span<const std::uint32_t> entries) {
    DistanceSequence s;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i] == 0) throw DomainError("distance sequence entries must be positive");
      if (i > 0 && entries[i] < entries[i - 1]) {
        throw DomainError("distance sequence entries must be nondecreasing");
      }
      s.push(entries[i], 1);
    }
    return s;
  }

  static DistanceSequence from_entries(std::initializer_list<std::uint32_t> entries) {
    return from_entries(std::span<const std::uint32_t>(entries.begin(), entries.size()));
  }

  /// Builds from (value, multiplicity) runs. Values must strictly increase;
  /// zero multiplicities are skipped.
  static DistanceSequence from_runs(std::span<const Run> runs) {
    DistanceSequence s;
    for (const auto& r : runs) {
      if (r.value == 0) throw DomainError("distance sequence entries must be positive");
      if (!s.runs_.empty() && r.value <= s.runs_.back().value && r.count > 0) {
        throw DomainError("distance sequence runs must have increasing values");
      }
      if (r.count > 0) s.push(r.value, r.count);
    }
    return s;
  }

  static DistanceSequence from_runs(std::initializer_list<Run> runs) {
    return from_runs(std::span<const Run>(runs.begin(), runs.size()));
  }

  /// Sorts an arbitrary multiset of positive distances.
  static DistanceSequence from_multiset(std::vector<std::uint32_t> values) {
    std::sort(values.begin(), values.end());
    return from_entries(values);
  }

  std::uint64_t size() const noexcept { return ends_.empty() ? 0 : ends_.back(); }
  bool empty() const noexcept { return runs_.empty(); }
  const std::vector<Run>& runs() const noexcept { return runs_; }

  std::uint32_t operator[](std::uint64_t i) const {
    if (i >= size()) throw DomainError("distance sequence index out of range");
    auto it = std::upper_bound(ends_.begin(), ends_.end(), i);
    return runs_[static_cast<std::size_t>(it - ends_.begin())].value;
  }

  std::uint32_t max() const { return runs_.empty() ? 0 : runs_.back().value; }

  /// Number of entries equal to `value`.
  std::uint64_t count(std::uint32_t value) const {
    for (const auto& r : runs_) {
      if (r.value == value) return r.count;
    }
    return 0;
  }

  std::vector<std::uint32_t> entries() const {
    std::vector<std::uint32_t> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (const auto& r : runs_) out.insert(out.end(), static_cast<std::size_t>(r.count), r.value);
    return out;
  }

  /// Order of the graph this sequence was derived from, when known.
  std::optional<std::size_t> source_order() const noexcept { return source_order_; }
  DistanceSequence& with_source_order(std::size_t n) {
    if (size() != static_cast<std::uint64_t>(n) * (n - (n > 0 ? 1 : 0)) / 2) {
      throw DomainError("sequence length does not equal n(n-1)/2 for n=" + std::to_string(n));
    }
    source_order_ = n;
    return *this;
  }

  /// Equality of contents; source_order is metadata and not compared.
  friend bool operator==(const DistanceSequence& a, const DistanceSequence& b) {
    return a.runs_ == b.runs_;
  }

 private:
  void push(std::uint32_t value, std::uint64_t count) {
    if (!runs_.empty() && runs_.back().value == value) {
      runs_.back().count += count;
      ends_.back() += count;
    } else {
      runs_.push_back({value, count});
      ends_.push_back(size() + count);
    }
  }

  std::vector<Run> runs_;
  std::vector<std::uint64_t> ends_;  // exclusive end position of each run
  std::optional<std::size_t> source_order_;
};

// ---------------------------------------------------------------------------
// text and JSON-ready forms

/// Run-length text such as "1^8 2^8 3^8 4^4"; a run of length one is bare.
inline std::string to_string(const DistanceSequence& s) {
  std::string out;
  for (const auto& r : s.runs()) {
    if (!out.empty()) out.push_back(' ');
    out += std::to_string(r.value);
    if (r.count != 1) out += "^" + std::to_string(r.count);
  }
  return out;
}

inline DistanceSequence parse_distance_sequence(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  std::vector<DistanceSequence::Run> runs;
  auto parse_uint = [&](const std::string& t) -> std::uint64_t {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError("distance sequence: bad token \"" + token + "\"");
    }
    return std::stoull(t);
  };
  while (in >> token) {
    const auto caret = token.find('^');
    const auto value = parse_uint(token.substr(0, caret));
    const auto count = caret == std::string::npos ? 1 : parse_uint(token.substr(caret + 1));
    if (!runs.empty() && runs.back().value == value) {
      runs.back().count += count;
    } else {
      runs.push_back({static_cast<std::uint32_t>(value), count});
    }
  }
  try {
    return DistanceSequence::from_runs(runs);
  } catch (const DomainError& e) {
    throw ParseError(std::string("distance sequence: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// construction from graphs

/// Sorted multiset of all pairwise distances of a connected graph.
inline DistanceSequence distance_sequence(const Graph& g) {
  const auto n = static_cast<Vertex>(g.order());
  std::map<std::uint32_t, std::uint64_t> counts;
  for (Vertex u = 0; u < n; ++u) {
    const auto row = bfs_distances(g, u);
    for (Vertex v = u + 1; v < n; ++v) {
      if (row[v] == kUnreachable) throw DisconnectedGraphError(u, v);
      ++counts[row[v]];
    }
  }
  std::vector<DistanceSequence::Run> runs;
  for (const auto& [value, count] : counts) runs.push_back({value, count});
  auto s = DistanceSequence::from_runs(runs);
  s.with_source_order(n);
  return s;
}

/// Sorted distances from v to every other vertex.
inline DistanceSequence vertex_distance_sequence(const Graph& g, Vertex v) {
  if (v >= g.order()) throw DomainError("vertex " + std::to_string(v) + " out of range");
  if (!is_connected(g)) {
    const auto row = bfs_distances(g, 0);
    const auto far = std::find(row.begin(), row.end(), kUnreachable) - row.begin();
    throw DisconnectedGraphError(0, static_cast<Vertex>(far));
  }
  auto row = bfs_distances(g, v);
  row.erase(row.begin() + v);
  return DistanceSequence::from_multiset(std::move(row));
}

// ---------------------------------------------------------------------------
// dominance

enum class Dominance { Less, Equal, Greater, Incomparable };

inline std::string_view to_string(Dominance d) {
  switch (d) {
    case Dominance::Less: return "Less";
    case Dominance::Equal: return "Equal";
    case Dominance::Greater: return "Greater";
    case Dominance::Incomparable: return "Incomparable";
  }
  return "?";
}

/// Outcome of comparing A with B coordinate-wise.
/// first_below: first i with a_i < b_i; first_above: first i with a_i > b_i.
struct DominanceRelation {
  Dominance tag = Dominance::Equal;
  std::optional<std::uint64_t> first_below;
  std::optional<std::uint64_t> first_above;

  bool at_most() const noexcept { return tag == Dominance::Less || tag == Dominance::Equal; }
  bool at_least() const noexcept { return tag == Dominance::Greater || tag == Dominance::Equal; }

  /// The coordinate that witnesses the relation: the first strict
  /// coordinate for Less/Greater, the first a_i > b_i for Incomparable.
  std::optional<std::uint64_t> witness() const {
    switch (tag) {
      case Dominance::Less: return first_below;
      case Dominance::Greater: return first_above;
      case Dominance::Incomparable: return first_above;
      case Dominance::Equal: return std::nullopt;
    }
    return std::nullopt;
  }
};

inline DominanceRelation compare(const DistanceSequence& a, const DistanceSequence& b) {
  if (a.size() != b.size()) {
    throw DomainError("cannot compare distance sequences of lengths " + std::to_string(a.size()) +
                      " and " + std::to_string(b.size()));
  }
  DominanceRelation rel;
  const auto& ra = a.runs();
  const auto& rb = b.runs();
  std::size_t ia = 0;
  std::size_t ib = 0;
  std::uint64_t left_a = ra.empty() ? 0 : ra[0].count;
  std::uint64_t left_b = rb.empty() ? 0 : rb[0].count;
  std::uint64_t pos = 0;
  // Walk the runs in lockstep; each step covers a block of positions where
  // both sequences are constant.
  while (ia < ra.size() && ib < rb.size()) {
    const std::uint64_t step = std::min(left_a, left_b);
    if (ra[ia].value < rb[ib].value && !rel.first_below) rel.first_below = pos;
    if (ra[ia].value > rb[ib].value && !rel.first_above) rel.first_above = pos;
    if (rel.first_below && rel.first_above) break;
    pos += step;
    left_a -= step;
    left_b -= step;
    if (left_a == 0 && ++ia < ra.size()) left_a = ra[ia].count;
    if (left_b == 0 && ++ib < rb.size()) left_b = rb[ib].count;
  }
  if (rel.first_below && rel.first_above) {
    rel.tag = Dominance::Incomparable;
  } else if (rel.first_below) {
    rel.tag = Dominance::Less;
  } else if (rel.first_above) {
    rel.tag = Dominance::Greater;
  } else {
    rel.tag = Dominance::Equal;
  }
  return rel;
}

/// Sorted concatenation (multiset union) of two sequences.
inline DistanceSequence merge(const DistanceSequence& a, const DistanceSequence& b) {
  std::vector<DistanceSequence::Run> out;
  const auto& ra = a.runs();
  const auto& rb = b.runs();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ra.size() || j < rb.size()) {
    if (j == rb.size() || (i < ra.size() && ra[i].value < rb[j].value)) {
      out.push_back(ra[i++]);
    } else if (i == ra.size() || rb[j].value < ra[i].value) {
      out.push_back(rb[j++]);
    } else {
      out.push_back({ra[i].value, ra[i].count + rb[j].count});
      ++i;
      ++j;
    }
  }
  return DistanceSequence::from_runs(out);
}

// ---------------------------------------------------------------------------
// vertex deletion bound

struct DeletionBound {
  bool holds = false;               // D(G) <= D(G-v) (.) D_G(v)
  bool equality = false;            // the two sides coincide
  bool predicted_equality = false;  // d_{G-v}(u,w) <= 2 for all neighbors u,w of v
  DominanceRelation relation;
  DistanceSequence lhs;
  DistanceSequence rhs;
};

/// Compares D(G) with D(G-v) merged with D_G(v) for a non-cut vertex v.
inline DeletionBound deletion_bound_check(const Graph& g, Vertex v) {
  if (v >= g.order()) throw DomainError("vertex " + std::to_string(v) + " out of range");
  if (!is_connected(g)) {
    const auto row = bfs_distances(g, 0);
    const auto far = std::find(row.begin(), row.end(), kUnreachable) - row.begin();
    throw DisconnectedGraphError(0, static_cast<Vertex>(far));
  }
  if (is_cut_vertex(g, v)) {
    throw DomainError("vertex " + std::to_string(v) + " is a cut vertex");
  }
  const Graph rest = g.without_vertex(v);
  DeletionBound r;
  r.lhs = distance_sequence(g);
  r.rhs = merge(distance_sequence(rest), vertex_distance_sequence(g, v));
  r.relation = compare(r.lhs, r.rhs);
  r.holds = r.relation.at_most();
  r.equality = r.relation.tag == Dominance::Equal;

  auto shift = [v](Vertex x) { return x > v ? x - 1 : x; };
  const auto& nbrs = g.neighbors(v);
  r.predicted_equality = true;
  for (std::size_t i = 0; i < nbrs.size() && r.predicted_equality; ++i) {
    const auto row = bfs_distances(rest, shift(nbrs[i]));
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (row[shift(nbrs[j])] > 2) {
        r.predicted_equality = false;
        break;
      }
    }
  }
  return r;
}

}  // namespace wienerseq
