// mincutx: command-line front end for the mincut library.
//
//   mincutx info     [INPUT]           lambda, degrees and classification
//   mincutx mincuts  [INPUT]           all minimum edge-cuts
//   mincutx xgraph   [INPUT]           the mincut graph X(G)
//   mincutx iterate  [INPUT]           orbit G, X(G), X^2(G), ...
//   mincutx verify   [INPUT]           crossing/nested structure checks
//   mincutx sweep    --n N             exhaustive sufficient-condition and fixed-point sweeps
//   mincutx survey   --model M ...     convergence survey over an ensemble
//   mincutx formats  [INPUT] --to F    format conversion
//
// INPUT is a file path or '-' (stdin, the default). --gen DESCRIPTOR builds a
// standard family instead, e.g. --gen cycle:5 or --gen prism:3.
//
// Exit status: 0 success, 1 a checked property failed, 2 usage or input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "mincut/json.hpp"
#include "mincut/mincut.hpp"

namespace fs = std::filesystem;
using namespace mincut;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct InputOptions {
  std::string path = "-";
  std::string gen;
  std::string format;
  std::size_t budget = kDefaultEnumerationBudget;
  bool table = false;
};

std::optional<Format> parse_format_name(const std::string& name) {
  if (name.empty()) return std::nullopt;
  if (name == "edgelist") return Format::EdgeList;
  if (name == "graph6") return Format::Graph6;
  if (name == "dot") return Format::Dot;
  throw Error(ErrorCode::ParseError, "unknown format '" + name + "'");
}

Graph load_graph(const InputOptions& in) {
  if (!in.gen.empty()) return generate(in.gen);
  std::string text;
  std::optional<Format> format = parse_format_name(in.format);
  if (in.path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(in.path);
    if (!file) throw Error(ErrorCode::ParseError, "cannot open '" + in.path + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    if (!format) {
      const std::string ext = fs::path(in.path).extension().string();
      if (ext == ".g6" || ext == ".graph6") format = Format::Graph6;
      else if (ext == ".txt" || ext == ".el" || ext == ".edges" || ext == ".edgelist") format = Format::EdgeList;
    }
  }
  return read_graph(text, format);
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.path, "Graph file, or '-' for stdin");
  cmd->add_option("--gen", in.gen, "Standard family, e.g. cycle:5, complete_bipartite:3,3, prism:3");
  cmd->add_option("--format", in.format, "Input format (edgelist|graph6); default by extension/content");
  cmd->add_option("--budget", in.budget, "Largest order accepted by mincut enumeration")
      ->check(CLI::Range(1, 64));
  cmd->add_flag("--table,!--json", in.table, "Human-readable output instead of JSON");
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------

int run_info(const InputOptions& in) {
  const Graph g = load_graph(in);
  json j = to_json(g);
  j["components"] = components(g).size();
  const bool connected = g.order() >= 2 && is_connected(g);
  j["lambda"] = connected ? edge_connectivity(g) : 0;
  std::optional<ClassificationReport> report;
  if (connected) {
    report = classify(g, enumerate_mincuts(g, in.budget));
    j["classification"] = to_json(*report);
  }
  if (!in.table) {
    print(j);
    return kOk;
  }
  std::cout << "n " << g.order() << "  m " << g.size() << "  components " << components(g).size() << "\n";
  if (!report) {
    std::cout << "lambda 0 (no mincuts)\n";
    return kOk;
  }
  const auto& r = *report;
  std::cout << "lambda                   " << r.lambda << "\n"
            << "delta / Delta            " << r.min_degree << " / " << r.max_degree << "\n"
            << "regular                  " << yes_no(r.regular) << "\n"
            << "maximally edge connected " << yes_no(r.maximally_edge_connected) << "\n"
            << "super-lambda             " << yes_no(r.super_lambda) << "\n"
            << "X(G) ~ G predicted       " << yes_no(r.fixed_point_predicted) << "\n"
            << "trivial / non-trivial    " << r.trivial_cut_count << " / " << r.nontrivial_cut_count << "\n"
            << "sufficient conditions    ";
  for (bool b : r.sufficient_conditions) std::cout << (b ? '1' : '0');
  std::cout << "\n";
  return kOk;
}

int run_mincuts(const InputOptions& in) {
  const Graph g = load_graph(in);
  const MincutFamily f = enumerate_mincuts(g, in.budget);
  if (!in.table) {
    json j = to_json(f);
    j["bounds"] = to_json(count_bound_check(f, g.order()));
    print(j);
    return kOk;
  }
  std::cout << "lambda " << f.lambda << ", " << f.size() << " mincut(s)\n";
  for (const Cut& c : f.cuts) {
    std::cout << (c.trivial() ? "  trivial     " : "  non-trivial ") << "A={";
    bool first = true;
    for (Vertex v : c.side_a_vertices()) {
      std::cout << (first ? "" : ",") << v;
      first = false;
    }
    std::cout << "}  edges:";
    for (const Edge& e : c.edges) std::cout << " " << e.u << "-" << e.v;
    std::cout << "\n";
  }
  return kOk;
}

int run_xgraph(const InputOptions& in, const std::string& to) {
  const Graph g = load_graph(in);
  const Graph x = mincut_graph(g, in.budget);
  if (auto format = parse_format_name(to)) {
    std::cout << write_graph(x, *format);
    return kOk;
  }
  json j = to_json(x);
  j["canonical"] = x.order() <= kDefaultIsoBudget ? json(canonical_form(x).hex()) : json(nullptr);
  if (in.table) {
    std::cout << "X(G): n " << x.order() << "  m " << x.size() << "  graph6 " << to_graph6(x) << "\n";
  } else {
    print(j);
  }
  return kOk;
}

int run_iterate(const InputOptions& in, std::size_t max_steps, const std::string& dump_dir,
                bool with_graph6) {
  const Graph g = load_graph(in);
  const IterationTrace trace = iterate(g, max_steps, in.budget);
  if (!dump_dir.empty()) {
    fs::create_directories(dump_dir);
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const Graph& step = trace.steps[i].graph;
      std::ofstream(fs::path(dump_dir) / ("step" + std::to_string(i) + ".g6")) << to_graph6(step) << "\n";
      std::ofstream(fs::path(dump_dir) / ("step" + std::to_string(i) + ".dot"))
          << to_dot(step, "X" + std::to_string(i));
    }
  }
  if (in.table) {
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
      const TraceStep& s = trace.steps[i];
      std::cout << "X^" << i << ": n " << s.graph.order() << "  m " << s.graph.size();
      if (s.lambda) std::cout << "  lambda " << *s.lambda << "  mincuts " << *s.mincut_count;
      std::cout << "\n";
    }
    std::cout << "outcome " << trace.outcome.describe() << "\n";
    return kOk;
  }
  json j = to_json(trace);
  if (with_graph6) {
    for (std::size_t i = 0; i < trace.steps.size(); ++i) j["steps"][i]["graph6"] = to_graph6(trace.steps[i].graph);
  }
  print(j);
  return kOk;
}

int run_verify(const InputOptions& in) {
  const Graph g = load_graph(in);
  const MincutFamily f = enumerate_mincuts(g, in.budget);
  const StructureReport r = verify_structure(g, f);
  if (in.table) {
    std::cout << "lambda " << r.lambda << ", " << r.cut_count << " cuts, " << r.pairs << " pairs ("
              << r.nested << " nested, " << r.crossing << " crossing)\n";
    for (const std::string& v : r.violations) std::cout << "VIOLATION " << v << "\n";
    std::cout << (r.ok() ? "all structure checks passed\n" : "structure checks FAILED\n");
  } else {
    print(to_json(r));
  }
  if (!r.ok()) {
    std::cerr << "verify: " << r.violations.size() << " violation(s): " << r.violations.front() << "\n";
    return kCheckFailed;
  }
  return kOk;
}

int run_sweep(std::size_t n, bool table) {
  if (n > 7) throw Error(ErrorCode::InvalidSpec, "sweep is capped at n = 7");
  const SoundnessReport soundness = soundness_sweep(n);
  const FixedPointSweepReport fixed = fixed_point_sweep(3, n);
  const std::size_t total = soundness.counterexamples.size() + fixed.counterexamples.size();
  const std::string summary = std::to_string(total) + " counterexamples";
  if (table) {
    std::cout << "sufficient conditions: " << soundness.graphs << " graphs, "
              << soundness.counterexamples.size() << " counterexamples\n"
              << "fixed points:          " << fixed.graphs << " graphs, " << fixed.fixed << " fixed, "
              << fixed.counterexamples.size() << " counterexamples\n"
              << summary << "\n";
  } else {
    print({{"n", n},
           {"soundness", to_json(soundness)},
           {"fixed_points", to_json(fixed)},
           {"summary", summary}});
  }
  if (total > 0) {
    for (const auto& c : soundness.counterexamples) std::cerr << "soundness: " << c.graph6 << " " << c.detail << "\n";
    for (const auto& c : fixed.counterexamples) std::cerr << "fixed point: " << c.graph6 << " " << c.detail << "\n";
    return kCheckFailed;
  }
  return kOk;
}

struct SurveyOptions {
  std::string model;
  std::size_t n = 0;
  double p = 0.5;
  std::size_t r = 3;
  std::size_t count = 100;
  std::optional<std::uint64_t> seed;
  std::size_t max_steps = kDefaultMaxSteps;
  std::size_t budget = kDefaultEnumerationBudget;
  bool labeled = false;
  bool census = false;
  bool records = false;
  bool table = false;
  std::string csv;
  std::string exemplars;
};

int run_survey(const SurveyOptions& o) {
  EnsembleSpec spec;
  if (o.model == "all") {
    spec.model = AllConnected{o.n, !o.labeled};
  } else {
    if (!o.seed) throw Error(ErrorCode::InvalidSpec, "randomized ensembles require --seed");
    spec.seed = *o.seed;
    spec.count = o.count;
    if (o.model == "gnp") spec.model = Gnp{o.n, o.p};
    else spec.model = RandomRegular{o.n, o.r};
  }
  const ConvergenceReport report = survey(spec, o.max_steps, o.budget);
  const PeriodicityCensus census = periodicity_census(report);
  if (!o.csv.empty()) std::ofstream(o.csv) << histogram_csv(report);
  if (!o.exemplars.empty()) {
    std::ofstream out(o.exemplars);
    for (const auto& [p, bucket] : census.periods) {
      for (const std::string& g6 : bucket.exemplars) out << g6 << "\n";
    }
  }
  if (o.table) {
    std::cout << report.ensemble << "  seed " << report.seed << " (" << report.generator << ")\n"
              << "drawn " << report.stats.drawn << "  accepted " << report.stats.accepted
              << "  discarded " << report.stats.discarded << "\n";
    for (const auto& [k, v] : report.totals) std::cout << "  " << to_string(k) << " " << v << "\n";
    std::cout << "null fraction " << report.null_fraction() << "\n";
    for (const auto& [p, bucket] : census.periods) std::cout << "  period " << p << ": " << bucket.count << "\n";
  } else {
    json j = to_json(report, o.records);
    if (o.census) j["census"] = to_json(census);
    print(j);
  }
  return kOk;
}

int run_formats(const InputOptions& in, const std::string& to) {
  const Graph g = load_graph(in);
  std::cout << write_graph(g, parse_format_name(to).value_or(Format::Graph6));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum edge-cuts, the mincut graph X(G) and its iteration"};
  app.require_subcommand(1);

  InputOptions in;
  std::string to;
  std::size_t max_steps = kDefaultMaxSteps;
  std::string dump_dir;
  bool step_graph6 = false;
  std::size_t sweep_n = 5;
  bool sweep_table = false;
  SurveyOptions so;

  auto* info = app.add_subcommand("info", "Edge connectivity, degrees and super-lambda classification");
  add_input_options(info, in);
  auto* mincuts = app.add_subcommand("mincuts", "Enumerate all minimum edge-cuts");
  add_input_options(mincuts, in);
  auto* xgraph = app.add_subcommand("xgraph", "Emit the mincut graph X(G)");
  add_input_options(xgraph, in);
  xgraph->add_option("--to", to, "Raw output format (edgelist|graph6|dot) instead of JSON");
  auto* iter = app.add_subcommand("iterate", "Iterate the X operator and classify the orbit");
  add_input_options(iter, in);
  iter->add_option("--max-steps", max_steps, "Step budget")->check(CLI::PositiveNumber);
  iter->add_option("--dump-steps", dump_dir, "Directory for per-step graph6 and DOT files");
  iter->add_flag("--graph6", step_graph6, "Include each step's graph6 in the JSON trace");
  auto* verify = app.add_subcommand("verify", "Check nested/crossing structure over all mincut pairs");
  add_input_options(verify, in);
  auto* sweep = app.add_subcommand("sweep", "Exhaustive sufficient-condition and fixed-point sweeps");
  sweep->add_option("--n", sweep_n, "Largest order (<= 7)")->check(CLI::Range(2, 7));
  sweep->add_flag("--table,!--json", sweep_table, "Human-readable output");
  auto* surv = app.add_subcommand("survey", "Convergence survey over an ensemble");
  surv->add_option("--model", so.model, "gnp | regular | all")
      ->required()
      ->check(CLI::IsMember({"gnp", "regular", "all"}));
  surv->add_option("--n", so.n, "Order")->required();
  surv->add_option("--p", so.p, "Edge probability (gnp)");
  surv->add_option("--r", so.r, "Degree (regular)");
  surv->add_option("--count", so.count, "Number of draws (gnp, regular)");
  surv->add_option("--seed", so.seed, "Seed for mt19937_64 (required for gnp and regular)");
  surv->add_option("--max-steps", so.max_steps, "Step budget per orbit")->check(CLI::PositiveNumber);
  surv->add_option("--budget", so.budget, "Largest order accepted by mincut enumeration")->check(CLI::Range(1, 64));
  surv->add_flag("--labeled", so.labeled, "all: keep every labeled graph instead of one per class");
  surv->add_flag("--census", so.census, "Add the periodicity census");
  surv->add_flag("--records", so.records, "Include per-graph records");
  surv->add_option("--csv", so.csv, "Write the step histogram as CSV");
  surv->add_option("--exemplars", so.exemplars, "Write periodic exemplars as graph6 lines");
  surv->add_flag("--table,!--json", so.table, "Human-readable output");
  auto* formats = app.add_subcommand("formats", "Convert between edge list, graph6 and DOT");
  add_input_options(formats, in);
  formats->add_option("--to", to, "Output format (edgelist|graph6|dot)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*info) return run_info(in);
    if (*mincuts) return run_mincuts(in);
    if (*xgraph) return run_xgraph(in, to);
    if (*iter) return run_iterate(in, max_steps, dump_dir, step_graph6);
    if (*verify) return run_verify(in);
    if (*sweep) return run_sweep(sweep_n, sweep_table);
    if (*surv) return run_survey(so);
    if (*formats) return run_formats(in, to);
  } catch (const Error& e) {
    std::cerr << "mincutx: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "mincutx: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
