// wienerseq: distance sequences, Wiener-type indices, extremal families and
// exhaustive verification from the command line.
//
// Exit codes: 0 success, 1 violation found, 2 usage error, 3 input error.
// `compare` instead reports the dominance relation: 0 equal, 10 less,
// 11 greater, 12 incomparable.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wienerseq/wienerseq.hpp"

namespace ws = wienerseq;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> sources;  // "input:<text-or-path>" or "family:<spec>", in command-line order
  std::vector<std::string> classes;
  std::vector<std::string> suites;
  std::string format = "graph6";
  std::string output_format = "text";
  std::vector<std::string> indices;
  std::size_t jobs = 1;
  std::size_t shards = 0;  // 0: same as jobs
  std::optional<std::size_t> max_n;
  std::optional<std::size_t> n;
  std::optional<std::size_t> limit;
  bool labeled = false;
  bool apollonian_only = false;
  std::string out;
  std::uint64_t seed = 1;

  ws::ShardOptions shard_options() const { return {shards == 0 ? jobs : shards, jobs}; }

  json to_json() const {
    json j{{"subcommand", subcommand},
           {"sources", sources},
           {"classes", classes},
           {"suites", suites},
           {"format", format},
           {"output_format", output_format},
           {"indices", indices},
           {"jobs", jobs},
           {"shards", shard_options().shards},
           {"labeled", labeled},
           {"apollonian_only", apollonian_only},
           {"out", out},
           {"seed", seed}};
    j["max_n"] = max_n ? json(*max_n) : json(nullptr);
    j["n"] = n ? json(*n) : json(nullptr);
    j["limit"] = limit ? json(*limit) : json(nullptr);
    return j;
  }
};

std::size_t default_jobs() {
  if (const char* env = std::getenv("WIENERSEQ_JOBS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("WIENERSEQ_JOBS must be a positive integer, got \"") + env + "\"");
  }
  return 1;
}

// ---------------------------------------------------------------------------
// output

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw ws::Error("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }
  void finish() {
    stream().flush();
    if (file_.is_open() && !file_) throw ws::Error("write to output file failed");
  }

 private:
  std::ofstream file_;
};

json envelope(const RunConfig& cfg) { return json{{"tool", ws::kToolName}, {"version", ws::kVersion}, {"config", cfg.to_json()}}; }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// input

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ws::ParseError("cannot read input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// An --input value names a file when one exists at that path; otherwise it
// is the graph text itself ("-" reads stdin).
std::string input_text(const std::string& value) {
  if (value == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(value, ec)) return slurp(value);
  return value;
}

std::vector<ws::Graph> graphs_from_text(const std::string& text, const std::string& format) {
  if (format == "edgelist") return {ws::parse_edge_list(text)};
  std::vector<ws::Graph> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(ws::parse_graph6(line));
  }
  if (out.empty()) throw ws::ParseError("no graph6 records in input");
  return out;
}

std::vector<ws::Graph> load_source(const std::string& source, const std::string& format) {
  if (source.rfind("family:", 0) == 0) return {ws::build(ws::parse_family(source.substr(7)))};
  return graphs_from_text(input_text(source.substr(6)), format);
}

ws::Graph load_single(const std::string& source, const std::string& format) {
  auto graphs = load_source(source, format);
  if (graphs.size() != 1) {
    throw ws::ParseError("expected exactly one graph from " + source + ", got " + std::to_string(graphs.size()));
  }
  return graphs.front();
}

std::vector<ws::IndexDefinition> resolve_indices(const RunConfig& cfg) {
  if (cfg.indices.empty()) return ws::indices::builtins();
  std::vector<ws::IndexDefinition> defs;
  for (const auto& spec : cfg.indices) defs.push_back(ws::parse_index(spec));
  return defs;
}

// Validates every spec string in the config up front so that a bad flag is
// a usage error rather than an input error.
void validate_specs(const RunConfig& cfg) {
  try {
    resolve_indices(cfg);
    for (const auto& s : cfg.sources) {
      if (s.rfind("family:", 0) == 0) ws::parse_family(s.substr(7));
    }
    for (const auto& c : cfg.classes) ws::parse_class(c);
    for (const auto& s : cfg.suites) ws::parse_suite(s);
  } catch (const ws::Error& e) {
    throw UsageError(e.what());
  }
}

void check_ceiling(const RunConfig& cfg, std::size_t n) {
  if (cfg.max_n && n > *cfg.max_n) {
    throw UsageError("order " + std::to_string(n) + " exceeds --max-n " + std::to_string(*cfg.max_n));
  }
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_compute(const RunConfig& cfg) {
  if (cfg.sources.empty()) throw UsageError("compute needs --input or --family");
  const auto defs = resolve_indices(cfg);
  std::vector<ws::Graph> graphs;
  for (const auto& s : cfg.sources) {
    auto more = load_source(s, cfg.format);
    graphs.insert(graphs.end(), more.begin(), more.end());
  }

  json results = json::array();
  for (const auto& g : graphs) {
    const auto seq = ws::distance_sequence(g);
    json r{{"graph6", ws::write_graph6(g)}, {"n", g.order()}, {"m", g.size()}, {"sequence", ws::to_string(seq)}};
    json values = json::array();
    for (const auto& def : defs) {
      json v{{"index", def.label()}, {"value", ws::evaluate(def, seq)}};
      const auto exact = ws::exact_value(def, seq);
      v["exact"] = exact ? json(ws::to_string(*exact)) : json(nullptr);
      values.push_back(v);
    }
    r["indices"] = values;
    results.push_back(r);
  }

  Output out(cfg.out);
  auto& os = out.stream();
  if (cfg.output_format == "json") {
    json doc = envelope(cfg);
    doc["results"] = results;
    os << doc.dump(2) << '\n';
  } else if (cfg.output_format == "csv") {
    os << "graph6,n,m,sequence";
    for (const auto& def : defs) os << ',' << csv_quote(def.label());
    os << '\n';
    for (const auto& r : results) {
      os << csv_quote(r["graph6"].get<std::string>()) << ',' << r["n"] << ',' << r["m"] << ','
         << csv_quote(r["sequence"].get<std::string>());
      for (const auto& v : r["indices"]) {
        os << ',' << (v["exact"].is_null() ? format_double(v["value"].get<double>()) : v["exact"].get<std::string>());
      }
      os << '\n';
    }
  } else {
    for (const auto& r : results) {
      os << "graph6: " << r["graph6"].get<std::string>() << "\n";
      os << "n = " << r["n"] << ", m = " << r["m"] << "\n";
      os << "D(G) = " << r["sequence"].get<std::string>() << "\n";
      for (const auto& v : r["indices"]) {
        os << v["index"].get<std::string>() << " = ";
        const std::string approx = format_double(v["value"].get<double>());
        if (v["exact"].is_null()) {
          os << approx;
        } else {
          const auto exact = v["exact"].get<std::string>();
          os << exact;
          if (exact.find('/') != std::string::npos) os << " (" << approx << ")";
        }
        os << "\n";
      }
    }
  }
  out.finish();
  return kExitOk;
}

int compare_exit_code(ws::Dominance d) {
  switch (d) {
    case ws::Dominance::Equal: return 0;
    case ws::Dominance::Less: return 10;
    case ws::Dominance::Greater: return 11;
    case ws::Dominance::Incomparable: return 12;
  }
  return kExitUsage;
}

int cmd_compare(const RunConfig& cfg) {
  if (cfg.sources.size() != 2) throw UsageError("compare needs exactly two graphs (--input/--family)");
  const auto a = load_single(cfg.sources[0], cfg.format);
  const auto b = load_single(cfg.sources[1], cfg.format);
  if (a.order() != b.order()) {
    throw ws::DomainError("order mismatch: " + std::to_string(a.order()) + " vs " + std::to_string(b.order()));
  }
  const auto sa = ws::distance_sequence(a);
  const auto sb = ws::distance_sequence(b);
  const auto rel = ws::compare(sa, sb);

  Output out(cfg.out);
  auto& os = out.stream();
  auto opt = [](const std::optional<std::size_t>& i) { return i ? json(*i) : json(nullptr); };
  if (cfg.output_format == "json") {
    json doc = envelope(cfg);
    doc["first"] = {{"graph6", ws::write_graph6(a)}, {"sequence", ws::to_string(sa)}};
    doc["second"] = {{"graph6", ws::write_graph6(b)}, {"sequence", ws::to_string(sb)}};
    doc["relation"] = std::string(ws::to_string(rel.tag));
    doc["first_below"] = opt(rel.first_below);
    doc["first_above"] = opt(rel.first_above);
    os << doc.dump(2) << '\n';
  } else if (cfg.output_format == "csv") {
    os << "first,second,relation,first_below,first_above\n";
    os << csv_quote(ws::to_string(sa)) << ',' << csv_quote(ws::to_string(sb)) << ',' << ws::to_string(rel.tag) << ','
       << (rel.first_below ? std::to_string(*rel.first_below) : "") << ','
       << (rel.first_above ? std::to_string(*rel.first_above) : "") << '\n';
  } else {
    os << "D(G1) = " << ws::to_string(sa) << "\n";
    os << "D(G2) = " << ws::to_string(sb) << "\n";
    os << "relation: " << ws::to_string(rel.tag) << "\n";
    if (rel.first_below) {
      os << "first coordinate with G1 < G2: " << *rel.first_below << " (" << sa[*rel.first_below] << " < "
         << sb[*rel.first_below] << ")\n";
    }
    if (rel.first_above) {
      os << "first coordinate with G1 > G2: " << *rel.first_above << " (" << sa[*rel.first_above] << " > "
         << sb[*rel.first_above] << ")\n";
    }
  }
  out.finish();
  return compare_exit_code(rel.tag);
}

void write_graphs(std::ostream& os, const std::vector<ws::Graph>& graphs, const std::string& format) {
  for (const auto& g : graphs) {
    if (format == "edgelist") {
      os << ws::write_edge_list(g) << '\n';
    } else {
      os << ws::write_graph6(g) << '\n';
    }
  }
}

int cmd_construct(const RunConfig& cfg) {
  if (cfg.sources.empty()) throw UsageError("construct needs --family");
  std::vector<ws::Graph> graphs;
  for (const auto& s : cfg.sources) {
    if (s.rfind("family:", 0) != 0) throw UsageError("construct takes --family only");
    const auto spec = ws::parse_family(s.substr(7));
    check_ceiling(cfg, spec.n);
    try {
      graphs.push_back(ws::build(spec));
    } catch (const ws::DomainError& e) {
      throw UsageError(e.what());
    }
  }
  Output out(cfg.out);
  if (cfg.output_format == "json") {
    json doc = envelope(cfg);
    doc["graphs"] = json::array();
    for (const auto& g : graphs) {
      doc["graphs"].push_back({{"graph6", ws::write_graph6(g)}, {"sequence", ws::to_string(ws::distance_sequence(g))}});
    }
    out.stream() << doc.dump(2) << '\n';
  } else {
    write_graphs(out.stream(), graphs, cfg.format);
  }
  out.finish();
  return kExitOk;
}

int cmd_enumerate(const RunConfig& cfg) {
  if (cfg.classes.size() != 1) throw UsageError("enumerate needs exactly one --class");
  auto spec = ws::parse_class(cfg.classes.front());
  spec.dedup = cfg.labeled ? ws::Dedup::Labeled : ws::Dedup::Unlabeled;
  spec.limit = cfg.limit;
  check_ceiling(cfg, spec.n);
  const auto start = std::chrono::steady_clock::now();
  ws::EnumerationResult result;
  try {
    result = ws::enumerate(spec, cfg.shard_options());
  } catch (const ws::DomainError& e) {
    throw UsageError(e.what());
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Output out(cfg.out);
  if (cfg.output_format == "json") {
    json doc = envelope(cfg);
    doc["class"] = ws::to_string(spec);
    doc["n"] = spec.n;
    doc["params"] = spec.param ? json::array({*spec.param}) : json::array();
    doc["count"] = result.graphs.size();
    doc["coverage"] = std::string(ws::to_string(result.coverage));
    doc["elapsed"] = elapsed;
    out.stream() << doc.dump(2) << '\n';
  } else if (cfg.output_format == "csv") {
    out.stream() << "class,n,count,coverage,elapsed\n"
                 << csv_quote(ws::to_string(spec)) << ',' << spec.n << ',' << result.graphs.size() << ','
                 << ws::to_string(result.coverage) << ',' << format_double(elapsed) << '\n';
  } else {
    write_graphs(out.stream(), result.graphs, cfg.format);
  }
  out.finish();
  return kExitOk;
}

int emit_reports(const RunConfig& cfg, const std::vector<ws::VerificationReport>& reports) {
  Output out(cfg.out);
  auto& os = out.stream();
  if (cfg.output_format == "json") {
    json doc = envelope(cfg);
    doc["reports"] = json::array();
    for (const auto& r : reports) doc["reports"].push_back(ws::report_to_json(r));
    os << doc.dump(2) << '\n';
  } else if (cfg.output_format == "csv") {
    os << ws::csv_header() << '\n';
    for (const auto& r : reports) os << ws::report_to_csv_row(r) << '\n';
  } else {
    for (const auto& r : reports) {
      os << r.suite << ' ' << r.params.dump() << ": " << (r.passed() ? "PASS" : "FAIL") << " — " << r.summary
         << " (graphs " << r.graphs_checked << ", instances " << r.instances_checked << ", equality witnesses "
         << r.equality_witnesses.size() << ", " << format_double(r.elapsed_s) << " s)\n";
      for (const auto& v : r.violations) {
        os << "  " << v.kind << ' ' << v.graph6;
        if (v.coordinate) os << " at " << *v.coordinate << " (" << *v.lhs << " > " << *v.rhs << ")";
        os << ": " << v.detail << '\n';
      }
    }
  }
  out.finish();
  for (const auto& r : reports) {
    if (!r.passed()) return kExitViolation;
  }
  return kExitOk;
}

std::size_t suite_order(const ws::SuiteSpec& spec) {
  return spec.suite == ws::Suite::Identities ? 0 : spec.params.front();
}

int cmd_verify(const RunConfig& cfg) {
  if (cfg.suites.empty()) throw UsageError("verify needs at least one --suite");
  ws::SuiteOptions opts;
  opts.shards = cfg.shard_options();
  opts.seed = cfg.seed;
  if (cfg.max_n) opts.identities_max_n = *cfg.max_n;
  opts.planar_mode = cfg.apollonian_only ? ws::PlanarMode::ApollonianOnly : ws::PlanarMode::FlipClosure;
  std::vector<ws::SuiteSpec> specs;
  for (const auto& s : cfg.suites) {
    specs.push_back(ws::parse_suite(s));
    check_ceiling(cfg, suite_order(specs.back()));
  }
  std::vector<ws::VerificationReport> reports;
  for (const auto& spec : specs) {
    try {
      reports.push_back(ws::run_suite(spec, opts));
    } catch (const ws::DomainError& e) {
      throw UsageError(e.what());
    }
  }
  return emit_reports(cfg, reports);
}

int cmd_explore(const RunConfig& cfg) {
  std::vector<std::size_t> orders;
  if (cfg.n) {
    orders.push_back(*cfg.n);
    check_ceiling(cfg, *cfg.n);
  } else {
    for (std::size_t n = 4; n <= cfg.max_n.value_or(8); ++n) orders.push_back(n);
  }
  const auto mode = cfg.apollonian_only ? ws::PlanarMode::ApollonianOnly : ws::PlanarMode::FlipClosure;
  std::vector<ws::VerificationReport> reports;
  for (auto n : orders) {
    try {
      reports.push_back(ws::search_maximal_planar(n, mode, cfg.shard_options()));
    } catch (const ws::DomainError& e) {
      throw UsageError(e.what());
    }
  }
  return emit_reports(cfg, reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance sequences, Wiener-type indices and extremal-graph verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(ws::kToolName) + " " + ws::kVersion);

  RunConfig cfg;
  std::vector<std::string> inputs;
  std::vector<std::string> families;
  std::optional<std::size_t> jobs;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "graph format for input and graph output")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    sub->add_option("--output-format", cfg.output_format, "report format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", cfg.out, "output path (default stdout)");
    sub->add_option("--max-n", cfg.max_n, "largest order allowed")->check(CLI::PositiveNumber);
    sub->add_option("--jobs", jobs, "worker threads (default $WIENERSEQ_JOBS or 1)")->check(CLI::PositiveNumber);
    sub->add_option("--shards", cfg.shards, "work partitions (default = jobs)")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "seed for random sampling");
  };
  auto add_sources = [&](CLI::App* sub) {
    sub->add_option("--input", inputs, "graph text, file path, or - for stdin")->allow_extra_args(false);
    sub->add_option("--family", families, "family spec, e.g. pk:6,8 or oddcat:10")->allow_extra_args(false);
  };

  auto* compute = app.add_subcommand("compute", "distance sequence and index values");
  add_common(compute);
  add_sources(compute);
  compute->add_option("--index", cfg.indices, "index name[:lambda], repeatable (default: all built-ins)")
      ->allow_extra_args(false);

  auto* compare = app.add_subcommand("compare", "dominance relation between two graphs");
  add_common(compare);
  add_sources(compare);

  auto* construct = app.add_subcommand("construct", "build extremal family members");
  add_common(construct);
  add_sources(construct);

  auto* enumerate = app.add_subcommand("enumerate", "enumerate a graph class");
  add_common(enumerate);
  enumerate->add_option("--class", cfg.classes, "class spec, e.g. odd_tree:10 or k_tree:8,2")->required();
  enumerate->add_option("--limit", cfg.limit, "stop after this many graphs");
  enumerate->add_flag("--labeled", cfg.labeled, "labeled graphs instead of isomorphism classes");

  auto* verify = app.add_subcommand("verify", "run verification suites");
  add_common(verify);
  verify->add_option("--suite", cfg.suites, "suite spec, e.g. order_size:7 or connectivity:8,2")
      ->required()
      ->allow_extra_args(false);
  verify->add_flag("--apollonian-only", cfg.apollonian_only, "maximal_planar: generate Apollonian networks only");

  auto* explore = app.add_subcommand("explore", "counterexample search over maximal planar graphs");
  add_common(explore);
  explore->add_option("--n", cfg.n, "single order to search (default 4..max-n, max-n default 8)");
  explore->add_flag("--apollonian-only", cfg.apollonian_only, "generate Apollonian networks only (partial coverage)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    cfg.subcommand = app.get_subcommands().front()->get_name();
    // Keep --input/--family in the order they appeared.
    std::size_t next_input = 0;
    std::size_t next_family = 0;
    for (const auto* opt : app.get_subcommands().front()->parse_order()) {
      if (opt->get_name() == "--input") cfg.sources.push_back("input:" + inputs.at(next_input++));
      if (opt->get_name() == "--family") cfg.sources.push_back("family:" + families.at(next_family++));
    }
    cfg.jobs = jobs ? *jobs : default_jobs();
    validate_specs(cfg);

    if (cfg.subcommand == "compute") return cmd_compute(cfg);
    if (cfg.subcommand == "compare") return cmd_compare(cfg);
    if (cfg.subcommand == "construct") return cmd_construct(cfg);
    if (cfg.subcommand == "enumerate") return cmd_enumerate(cfg);
    if (cfg.subcommand == "verify") return cmd_verify(cfg);
    if (cfg.subcommand == "explore") return cmd_explore(cfg);
    throw UsageError("unknown subcommand");
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ws::Error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}
