#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <type_traits>
#include <vector>

#include <nlohmann/json.hpp>

#include "wienerseq/canonical.hpp"
#include "wienerseq/constructions.hpp"
#include "wienerseq/distance_sequence.hpp"
#include "wienerseq/enumeration.hpp"
#include "wienerseq/errors.hpp"
#include "wienerseq/indices.hpp"
#include "wienerseq/sampling.hpp"
#include "wienerseq/version.hpp"

namespace wienerseq {

/// One failed check. Dominance failures carry the first coordinate where
/// the checked sequence exceeds the bound and both values there.
struct Violation {
  std::string graph6;
  std::string kind;
  std::optional<std::uint64_t> coordinate;
  std::optional<std::uint32_t> lhs;
  std::optional<std::uint32_t> rhs;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation& a, const Violation& b) {
    return std::tie(a.graph6, a.kind, a.detail, a.coordinate) <=> std::tie(b.graph6, b.kind, b.detail, b.coordinate);
  }
};

/// Reference graph a suite compares against, e.g. PK_{n,m} for one m.
struct Extremal {
  std::string label;
  std::string graph6;
  std::string sequence;

  friend bool operator==(const Extremal&, const Extremal&) = default;
};

struct VerificationReport {
  std::string suite;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t graphs_checked = 0;
  std::uint64_t instances_checked = 0;
  std::vector<Violation> violations;
  std::vector<std::string> equality_witnesses;
  std::vector<Extremal> extremals;
  std::optional<Coverage> coverage;
  std::string summary;
  double elapsed_s = 0.0;
  std::size_t shards = 1;

  bool passed() const noexcept { return violations.empty(); }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// ---------------------------------------------------------------------------
// JSON

inline void to_json(nlohmann::json& j, const Violation& v) {
  j = nlohmann::json{{"graph6", v.graph6}, {"kind", v.kind}, {"detail", v.detail}};
  j["coordinate"] = v.coordinate ? nlohmann::json(*v.coordinate) : nlohmann::json(nullptr);
  j["lhs"] = v.lhs ? nlohmann::json(*v.lhs) : nlohmann::json(nullptr);
  j["rhs"] = v.rhs ? nlohmann::json(*v.rhs) : nlohmann::json(nullptr);
}

inline void from_json(const nlohmann::json& j, Violation& v) {
  j.at("graph6").get_to(v.graph6);
  j.at("kind").get_to(v.kind);
  j.at("detail").get_to(v.detail);
  auto opt = [&](const char* key, auto& field) {
    using T = typename std::remove_reference_t<decltype(field)>::value_type;
    if (j.at(key).is_null()) {
      field.reset();
    } else {
      field = j.at(key).get<T>();
    }
  };
  opt("coordinate", v.coordinate);
  opt("lhs", v.lhs);
  opt("rhs", v.rhs);
}

inline void to_json(nlohmann::json& j, const Extremal& e) {
  j = nlohmann::json{{"label", e.label}, {"graph6", e.graph6}, {"sequence", e.sequence}};
}

inline void from_json(const nlohmann::json& j, Extremal& e) {
  j.at("label").get_to(e.label);
  j.at("graph6").get_to(e.graph6);
  j.at("sequence").get_to(e.sequence);
}

/// Report as JSON. With include_run_metadata = false the timing and shard
/// fields are omitted, leaving only content that is identical across runs.
inline nlohmann::json report_to_json(const VerificationReport& r, bool include_run_metadata = true) {
  nlohmann::json j{{"tool", kToolName},
                   {"version", kVersion},
                   {"suite", r.suite},
                   {"params", r.params},
                   {"graphs_checked", r.graphs_checked},
                   {"instances_checked", r.instances_checked},
                   {"violations", r.violations},
                   {"equality_witnesses", r.equality_witnesses},
                   {"extremals", r.extremals},
                   {"status", r.passed() ? "pass" : "fail"},
                   {"summary", r.summary}};
  j["coverage"] = r.coverage ? nlohmann::json(std::string(to_string(*r.coverage))) : nlohmann::json(nullptr);
  if (include_run_metadata) {
    j["elapsed_s"] = r.elapsed_s;
    j["shards"] = r.shards;
  }
  return j;
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
  VerificationReport r;
  j.at("suite").get_to(r.suite);
  r.params = j.at("params");
  j.at("graphs_checked").get_to(r.graphs_checked);
  j.at("instances_checked").get_to(r.instances_checked);
  j.at("violations").get_to(r.violations);
  j.at("equality_witnesses").get_to(r.equality_witnesses);
  j.at("extremals").get_to(r.extremals);
  j.at("summary").get_to(r.summary);
  if (!j.at("coverage").is_null()) {
    r.coverage = j.at("coverage").get<std::string>() == "complete" ? Coverage::Complete : Coverage::Partial;
  }
  if (j.contains("elapsed_s")) j.at("elapsed_s").get_to(r.elapsed_s);
  if (j.contains("shards")) j.at("shards").get_to(r.shards);
  return r;
}

inline std::string csv_header() { return "suite,params,graphs_checked,instances_checked,violations,equality_witnesses,status,elapsed_s"; }

inline std::string report_to_csv_row(const VerificationReport& r) {
  std::string params = r.params.dump();
  std::string quoted = "\"";
  for (char c : params) {
    if (c == '"') quoted.push_back('"');
    quoted.push_back(c);
  }
  quoted.push_back('"');
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", r.elapsed_s);
  return r.suite + "," + quoted + "," + std::to_string(r.graphs_checked) + "," + std::to_string(r.instances_checked) +
         "," + std::to_string(r.violations.size()) + "," + std::to_string(r.equality_witnesses.size()) + "," +
         (r.passed() ? "pass" : "fail") + "," + elapsed;
}

// ---------------------------------------------------------------------------
// suite machinery

namespace detail {

struct Partial {
  std::uint64_t graphs = 0;
  std::uint64_t instances = 0;
  std::vector<Violation> violations;
  std::vector<std::string> witnesses;
};

/// Runs `check` over every graph with graphs dealt round-robin to shards,
/// then merges the shard results and sorts them canonically.
inline void check_all(const std::vector<Graph>& graphs, const ShardOptions& opts,
                      const std::function<void(const Graph&, Partial&)>& check, VerificationReport& report) {
  const std::size_t shards = std::max<std::size_t>(1, opts.shards);
  std::vector<Partial> parts(shards);
  run_shards(opts, [&](std::size_t s) {
    for (std::size_t i = s; i < graphs.size(); i += shards) {
      ++parts[s].graphs;
      check(graphs[i], parts[s]);
    }
  });
  for (auto& p : parts) {
    report.graphs_checked += p.graphs;
    report.instances_checked += p.instances;
    report.violations.insert(report.violations.end(), p.violations.begin(), p.violations.end());
    report.equality_witnesses.insert(report.equality_witnesses.end(), p.witnesses.begin(), p.witnesses.end());
  }
  std::sort(report.violations.begin(), report.violations.end());
  std::sort(report.equality_witnesses.begin(), report.equality_witnesses.end());
  report.equality_witnesses.erase(std::unique(report.equality_witnesses.begin(), report.equality_witnesses.end()),
                                  report.equality_witnesses.end());
  report.shards = shards;
}

/// Checks D(G) <= bound and, when that holds, that every built-in index
/// orders G and the bound graph consistently. Index failures under a
/// passing dominance check are internal inconsistencies.
inline void check_dominated(const Graph& g, const DistanceSequence& dg, const DistanceSequence& bound, Partial& out) {
  const auto rel = compare(dg, bound);
  const std::string g6 = write_graph6(g);
  if (!rel.at_most()) {
    const auto i = *rel.first_above;
    out.violations.push_back({g6, "dominance", i, dg[i], bound[i],
                              "D(G) = " + to_string(dg) + " is not below " + to_string(bound) + " (" +
                                  std::string(to_string(rel.tag)) + ")"});
    return;
  }
  if (rel.tag == Dominance::Equal) out.witnesses.push_back(g6);
  for (const auto& def : indices::builtins()) {
    if (!monotone_consistency(def, dg, bound)) {
      out.violations.push_back({g6, "internal_inconsistency", std::nullopt, std::nullopt, std::nullopt,
                                def.label() + " disagrees with a passing dominance check"});
    }
  }
}

inline void timed(VerificationReport& report, const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  report.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

inline Extremal extremal(std::string label, const Graph& g) {
  return {std::move(label), write_graph6(g), to_string(distance_sequence(g))};
}

inline std::string pass_summary(const VerificationReport& r, std::string_view what) {
  if (!r.passed()) return std::to_string(r.violations.size()) + " violation(s) found";
  return "no violations: " + std::string(what);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// suites

/// Every connected graph of order n is dominated by the path-complete graph
/// of the same size.
inline VerificationReport verify_order_size(std::size_t n, const ShardOptions& opts = {}) {
  detail::require(n >= 2 && n <= 7, "verify_order_size supports 2 <= n <= 7");
  VerificationReport report;
  report.suite = "order_size";
  report.params = {{"n", n}};
  detail::timed(report, [&] {
    const auto graphs = enumerate_connected(n, std::nullopt, Dedup::Unlabeled, opts);
    std::vector<DistanceSequence> bounds(n * (n - 1) / 2 + 1);
    for (std::size_t m = n - 1; m < bounds.size(); ++m) {
      const auto pk = path_complete(n, m);
      bounds[m] = distance_sequence(pk);
      report.extremals.push_back(detail::extremal("PK(" + std::to_string(n) + "," + std::to_string(m) + ")", pk));
    }
    detail::check_all(graphs, opts, [&](const Graph& g, detail::Partial& out) {
      ++out.instances;
      detail::check_dominated(g, distance_sequence(g), bounds[g.size()], out);
    }, report);
    report.summary = detail::pass_summary(report, "every graph is dominated by the path-complete graph of its size");
  });
  return report;
}

/// Every kappa-connected graph of order n (kappa even) is dominated by
/// C_n^{kappa/2}; for kappa = 2 the cycle is the only equality case.
inline VerificationReport verify_connectivity(std::size_t n, std::size_t kappa, const ShardOptions& opts = {}) {
  if (kappa % 2 != 0) {
    throw DomainError("odd connectivity unsupported: the cycle-power bound is stated for even kappa only");
  }
  detail::require(n >= 3 && n <= kMaxConnectedOrder && kappa >= 2 && kappa < n,
                  "verify_connectivity supports 3 <= n <= 8 and even 2 <= kappa < n");
  VerificationReport report;
  report.suite = "connectivity";
  report.params = {{"n", n}, {"kappa", kappa}};
  detail::timed(report, [&] {
    const auto graphs = enumerate_k_connected(n, kappa, Dedup::Unlabeled, opts);
    const auto bound_graph = cycle_power(n, kappa / 2);
    const auto bound = distance_sequence(bound_graph);
    report.extremals.push_back(detail::extremal("C(" + std::to_string(n) + ")^" + std::to_string(kappa / 2), bound_graph));
    detail::check_all(graphs, opts, [&](const Graph& g, detail::Partial& out) {
      ++out.instances;
      detail::check_dominated(g, distance_sequence(g), bound, out);
    }, report);
    if (kappa == 2) {
      const std::vector<std::string> expected{canonical_form(cycle(n)).certificate};
      if (report.equality_witnesses != expected) {
        std::string got;
        for (const auto& w : report.equality_witnesses) got += (got.empty() ? "" : " ") + w;
        report.violations.push_back({expected[0], "equality_set", std::nullopt, std::nullopt, std::nullopt,
                                     "equality set is {" + got + "}, expected exactly the cycle"});
      }
    }
    report.summary = detail::pass_summary(report, "every graph is dominated by the cycle power");
  });
  return report;
}

enum class DegenerateClass { MaximalKDegenerate, KTree, Apollonian };

inline std::string_view to_string(DegenerateClass c) {
  switch (c) {
    case DegenerateClass::MaximalKDegenerate: return "maximal_k_degenerate";
    case DegenerateClass::KTree: return "k_tree";
    case DegenerateClass::Apollonian: return "apollonian";
  }
  return "?";
}

/// Maximal k-degenerate graphs (or k-trees, or Apollonian networks with
/// k = 3) of order n are dominated by P_n^k. Also checks that each graph is
/// k-connected and replays the inductive step: a degree-k vertex v exists,
/// is not a cut vertex, satisfies the deletion bound, has D_G(v) below the
/// end-vertex sequence of P_n^k, and leaves a maximal k-degenerate G - v.
inline VerificationReport verify_k_degenerate(std::size_t n, std::size_t k, DegenerateClass cls,
                                              const ShardOptions& opts = {}) {
  detail::require(k >= 1 && k + 1 <= n, "verify_k_degenerate needs 1 <= k <= n-1");
  if (cls == DegenerateClass::Apollonian) detail::require(k == 3, "Apollonian networks are 3-trees; use k = 3");
  VerificationReport report;
  report.suite = "k_degenerate";
  report.params = {{"n", n}, {"k", k}, {"class", std::string(to_string(cls))}};
  detail::timed(report, [&] {
    std::vector<Graph> graphs;
    switch (cls) {
      case DegenerateClass::MaximalKDegenerate: graphs = enumerate_maximal_k_degenerate(n, k, opts); break;
      case DegenerateClass::KTree: graphs = enumerate_k_trees(n, k, opts); break;
      case DegenerateClass::Apollonian: graphs = enumerate_apollonian(n, opts); break;
    }
    const auto bound_graph = path_power(n, k);
    const auto bound = distance_sequence(bound_graph);
    const auto end_bound = end_vertex_sequence_path_power(n, k);
    report.extremals.push_back(detail::extremal("P(" + std::to_string(n) + ")^" + std::to_string(k), bound_graph));
    detail::check_all(graphs, opts, [&](const Graph& g, detail::Partial& out) {
      ++out.instances;
      const std::string g6 = write_graph6(g);
      auto fail = [&](std::string kind, std::string detail) {
        out.violations.push_back({g6, std::move(kind), std::nullopt, std::nullopt, std::nullopt, std::move(detail)});
      };
      detail::check_dominated(g, distance_sequence(g), bound, out);
      if (vertex_connectivity(g) < k) fail("connectivity", "graph is not k-connected");
      Vertex v = 0;
      while (v < g.order() && g.degree(v) != k) ++v;
      if (v == g.order()) {
        fail("inductive_step", "no vertex of degree k");
        return;
      }
      if (is_cut_vertex(g, v)) {
        fail("inductive_step", "degree-k vertex " + std::to_string(v) + " is a cut vertex");
        return;
      }
      if (!deletion_bound_check(g, v).holds) fail("deletion_bound", "vertex " + std::to_string(v));
      if (!compare(vertex_distance_sequence(g, v), end_bound).at_most()) {
        fail("inductive_step", "D_G(v) exceeds the end-vertex sequence of P_n^k at vertex " + std::to_string(v));
      }
      if (n >= 2) {
        const auto rest = degeneracy_check(g.without_vertex(v), k);
        if (!(rest.is_k_degenerate && rest.is_maximal)) fail("inductive_step", "G - v is not maximal k-degenerate");
      }
    }, report);
    report.summary = detail::pass_summary(report, "every graph is dominated by the path power");
  });
  return report;
}

/// Every odd tree of order n is dominated by T_n; also confirms the
/// increment recurrence D(T_n) = D(T_{n-2}) merged with (1^2, 2^3, 3^4, ...).
inline VerificationReport verify_odd_trees(std::size_t n, const ShardOptions& opts = {}) {
  if (n % 2 != 0) throw DomainError("odd trees have even order; got n=" + std::to_string(n));
  detail::require(n >= 4 && n <= kMaxOddTreeOrder, "verify_odd_trees supports even 4 <= n <= 14");
  VerificationReport report;
  report.suite = "odd_trees";
  report.params = {{"n", n}};
  detail::timed(report, [&] {
    const auto graphs = enumerate_odd_trees(n, opts);
    const auto bound_graph = odd_caterpillar(n);
    const auto bound = distance_sequence(bound_graph);
    report.extremals.push_back(detail::extremal("T(" + std::to_string(n) + ")", bound_graph));
    if (n >= 6) {
      const auto rebuilt = merge(distance_sequence(odd_caterpillar(n - 2)), odd_caterpillar_increment(n));
      if (rebuilt != bound) {
        report.violations.push_back({write_graph6(bound_graph), "recurrence", std::nullopt, std::nullopt, std::nullopt,
                                     "D(T_{n-2}) merged with the increment gives " + to_string(rebuilt)});
      }
    }
    detail::check_all(graphs, opts, [&](const Graph& g, detail::Partial& out) {
      ++out.instances;
      detail::check_dominated(g, distance_sequence(g), bound, out);
    }, report);
    std::sort(report.violations.begin(), report.violations.end());
    report.summary = detail::pass_summary(report, "every odd tree is dominated by T_n");
  });
  return report;
}

/// Deletion bound over every connected graph of order n and every non-cut
/// vertex: D(G) <= D(G-v) merged with D_G(v), with equality exactly when
/// all neighbor pairs of v stay within distance 2 in G - v.
inline VerificationReport verify_deletion_lemma(std::size_t n, const ShardOptions& opts = {}) {
  detail::require(n >= 2 && n <= 7, "verify_deletion_lemma supports 2 <= n <= 7");
  VerificationReport report;
  report.suite = "deletion";
  report.params = {{"n", n}};
  detail::timed(report, [&] {
    const auto graphs = enumerate_connected(n, std::nullopt, Dedup::Unlabeled, opts);
    detail::check_all(graphs, opts, [&](const Graph& g, detail::Partial& out) {
      const std::string g6 = write_graph6(g);
      bool any_equality = false;
      for (Vertex v = 0; v < g.order(); ++v) {
        if (is_cut_vertex(g, v)) continue;
        ++out.instances;
        const auto r = deletion_bound_check(g, v);
        if (!r.holds) {
          const auto i = *r.relation.first_above;
          out.violations.push_back({g6, "deletion_bound", i, r.lhs[i], r.rhs[i], "vertex " + std::to_string(v)});
        }
        if (r.equality != r.predicted_equality) {
          out.violations.push_back({g6, "deletion_equality", std::nullopt, std::nullopt, std::nullopt,
                                    "vertex " + std::to_string(v) + ": equality=" + (r.equality ? "true" : "false") +
                                        " predicted=" + (r.predicted_equality ? "true" : "false")});
        }
        any_equality = any_equality || r.equality;
      }
      if (any_equality) out.witnesses.push_back(g6);
    }, report);
    report.summary = detail::pass_summary(report, "bound holds and equality matches the distance-2 predicate");
  });
  return report;
}

/// Searches the maximal planar graphs of order n for one not dominated by
/// P_n^3. Reports coverage: complete with flip closure, partial when only
/// Apollonian networks are generated.
inline VerificationReport search_maximal_planar(std::size_t n, PlanarMode mode = PlanarMode::FlipClosure,
                                                const ShardOptions& opts = {}) {
  detail::require(n >= 4 && n <= kMaxPlanarOrder, "search_maximal_planar supports 4 <= n <= 9");
  VerificationReport report;
  report.suite = "maximal_planar";
  report.params = {{"n", n}, {"mode", mode == PlanarMode::FlipClosure ? "flip_closure" : "apollonian_only"}};
  detail::timed(report, [&] {
    auto planar = enumerate_maximal_planar(n, mode, opts);
    report.coverage = planar.coverage;
    const auto bound_graph = path_power(n, 3);
    const auto bound = distance_sequence(bound_graph);
    report.extremals.push_back(detail::extremal("P(" + std::to_string(n) + ")^3", bound_graph));
    // The Apollonian networks must all be present in the generated set.
    std::set<std::string> generated;
    for (const auto& g : planar.graphs) generated.insert(write_graph6(g));
    for (const auto& a : enumerate_apollonian(n, opts)) {
      if (!generated.contains(write_graph6(a))) {
        report.violations.push_back({write_graph6(a), "apollonian_subset", std::nullopt, std::nullopt, std::nullopt,
                                     "Apollonian network missing from the generated set"});
      }
    }
    std::vector<Violation> structural = report.violations;
    report.violations.clear();
    detail::check_all(planar.graphs, opts, [&](const Graph& g, detail::Partial& out) {
      ++out.instances;
      const auto dg = distance_sequence(g);
      const auto rel = compare(dg, bound);
      const std::string g6 = write_graph6(g);
      if (g.size() != 3 * n - 6) {
        out.violations.push_back({g6, "not_maximal_planar", std::nullopt, std::nullopt, std::nullopt,
                                  "size " + std::to_string(g.size()) + " != 3n-6"});
      }
      if (!rel.at_most()) {
        const auto i = *rel.first_above;
        out.violations.push_back({g6, "counterexample_candidate", i, dg[i], bound[i],
                                  "D(G) = " + to_string(dg) + " is not below D(P_n^3) = " + to_string(bound)});
      } else if (rel.tag == Dominance::Equal) {
        out.witnesses.push_back(g6);
      }
    }, report);
    report.violations.insert(report.violations.end(), structural.begin(), structural.end());
    std::sort(report.violations.begin(), report.violations.end());
    const std::string coverage(to_string(*report.coverage));
    report.summary = report.passed()
                         ? "no counterexample at this order, coverage = " + coverage
                         : std::to_string(report.violations.size()) + " counterexample candidate(s), coverage = " + coverage;
  });
  return report;
}

/// Index identities on random connected graphs: variable_wiener(1) = wiener,
/// variable_wiener(-1) = harary, gen_hyper_wiener(1) = hyper_wiener and
/// log_mult_wiener = ln(mult_wiener), within 1e-9 relative error.
inline VerificationReport verify_index_identities(std::size_t samples, std::size_t max_n, std::uint64_t seed,
                                                  const ShardOptions& opts = {}) {
  detail::require(max_n >= 2 && max_n <= 20, "verify_index_identities supports 2 <= max_n <= 20");
  VerificationReport report;
  report.suite = "identities";
  report.params = {{"samples", samples}, {"max_n", max_n}, {"seed", seed}};
  detail::timed(report, [&] {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> order(2, max_n);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    std::vector<Graph> graphs;
    graphs.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
      const std::size_t n = order(rng);
      graphs.push_back(random_connected_graph(n, density(rng), rng));
    }
    auto close = [](double a, double b) { return std::fabs(a - b) <= 1e-9 * std::max({1.0, std::fabs(a), std::fabs(b)}); };
    detail::check_all(graphs, opts, [&](const Graph& g, detail::Partial& out) {
      const auto s = distance_sequence(g);
      auto check = [&](const std::string& what, double a, double b) {
        ++out.instances;
        if (!close(a, b)) {
          out.violations.push_back({write_graph6(g), "identity", std::nullopt, std::nullopt, std::nullopt,
                                    what + ": " + std::to_string(a) + " vs " + std::to_string(b)});
        }
      };
      check("variable_wiener(1) = wiener", evaluate(indices::variable_wiener(1), s), evaluate(indices::wiener(), s));
      check("variable_wiener(-1) = harary", evaluate(indices::variable_wiener(-1), s), evaluate(indices::harary(), s));
      check("gen_hyper_wiener(1) = hyper_wiener", evaluate(indices::gen_hyper_wiener(1), s),
            evaluate(indices::hyper_wiener(), s));
      check("log_mult_wiener = ln(mult_wiener)", evaluate(indices::log_mult_wiener(), s),
            std::log(evaluate(indices::mult_wiener(), s)));
    }, report);
    report.summary = detail::pass_summary(report, "all identities hold");
  });
  return report;
}

// ---------------------------------------------------------------------------
// suite specs

enum class Suite { OrderSize, Connectivity, KDegenerate, KTree, Outerplanar, Apollonian, OddTrees, Deletion, MaximalPlanar, Identities };

struct SuiteSpec {
  Suite suite = Suite::OrderSize;
  std::vector<std::size_t> params;
};

namespace detail {

struct SuiteName {
  std::string_view name;
  Suite suite;
  std::size_t arity;
};

inline constexpr SuiteName kSuiteNames[] = {
    {"order_size", Suite::OrderSize, 1},   {"connectivity", Suite::Connectivity, 2},
    {"k_degenerate", Suite::KDegenerate, 2}, {"k_tree", Suite::KTree, 2},
    {"outerplanar", Suite::Outerplanar, 1}, {"apollonian", Suite::Apollonian, 1},
    {"odd_trees", Suite::OddTrees, 1},     {"deletion", Suite::Deletion, 1},
    {"maximal_planar", Suite::MaximalPlanar, 1}, {"identities", Suite::Identities, 1},
};

}  // namespace detail

/// Parses "order_size:n", "connectivity:n,kappa", "k_degenerate:n,k",
/// "k_tree:n,k", "outerplanar:n", "apollonian:n", "odd_trees:n",
/// "deletion:n", "maximal_planar:n", "identities:samples".
inline SuiteSpec parse_suite(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("suite \"" + std::string(text) + "\": missing ':'");
  const auto name = text.substr(0, colon);
  std::vector<std::size_t> params;
  std::string_view rest = text.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const auto tok = rest.substr(0, comma);
    if (tok.empty() || tok.size() > 9 || tok.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ParseError("suite \"" + std::string(text) + "\": bad number \"" + std::string(tok) + "\"");
    }
    params.push_back(std::stoul(std::string(tok)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  for (const auto& s : detail::kSuiteNames) {
    if (s.name != name) continue;
    if (params.size() != s.arity) throw ParseError("suite \"" + std::string(text) + "\": wrong number of parameters");
    return {s.suite, params};
  }
  throw ParseError("unknown suite \"" + std::string(name) + "\"");
}

struct SuiteOptions {
  ShardOptions shards;
  std::uint64_t seed = 1;
  std::size_t identities_max_n = 10;
  PlanarMode planar_mode = PlanarMode::FlipClosure;
};

inline VerificationReport run_suite(const SuiteSpec& spec, const SuiteOptions& opts = {}) {
  const auto& p = spec.params;
  switch (spec.suite) {
    case Suite::OrderSize: return verify_order_size(p[0], opts.shards);
    case Suite::Connectivity: return verify_connectivity(p[0], p[1], opts.shards);
    case Suite::KDegenerate: return verify_k_degenerate(p[0], p[1], DegenerateClass::MaximalKDegenerate, opts.shards);
    case Suite::KTree: {
      auto r = verify_k_degenerate(p[0], p[1], DegenerateClass::KTree, opts.shards);
      r.suite = "k_tree";
      return r;
    }
    case Suite::Outerplanar: {
      // Maximal outerplanar graphs are 2-trees; checking all 2-trees covers them.
      auto r = verify_k_degenerate(p[0], 2, DegenerateClass::KTree, opts.shards);
      r.suite = "outerplanar";
      return r;
    }
    case Suite::Apollonian: {
      auto r = verify_k_degenerate(p[0], 3, DegenerateClass::Apollonian, opts.shards);
      r.suite = "apollonian";
      return r;
    }
    case Suite::OddTrees: return verify_odd_trees(p[0], opts.shards);
    case Suite::Deletion: return verify_deletion_lemma(p[0], opts.shards);
    case Suite::MaximalPlanar: return search_maximal_planar(p[0], opts.planar_mode, opts.shards);
    case Suite::Identities: return verify_index_identities(p[0], opts.identities_max_n, opts.seed, opts.shards);
  }
  throw DomainError("unknown suite");
}

}  // namespace wienerseq
