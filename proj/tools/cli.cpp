#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "emergy/dag_solver.hpp"
#include "emergy/fixtures.hpp"
#include "emergy/generators.hpp"
#include "emergy/graph.hpp"
#include "emergy/hardness.hpp"
#include "emergy/paths.hpp"
#include "emergy/state_solver.hpp"

namespace emergy::cli {

namespace {

// Signals an early exit with a code; the message goes to stderr.
struct Exit {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kUsage, "cannot read " + path};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

EmergyGraph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_graph(text);
  } catch (const ParseError& e) {
    throw Exit{kUsage, path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.detail()};
  }
}

Digraph load_digraph(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse_digraph(text);
  } catch (const ParseError& e) {
    throw Exit{kUsage, path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.detail()};
  }
}

EmergyGraph load_valid_graph(const std::string& path, std::ostream& out) {
  EmergyGraph g = load_graph(path);
  const auto violations = validate_graph(g);
  if (!violations.empty()) {
    for (const auto& v : violations) out << "violation: " << v.message << '\n';
    throw Exit{kFailure, path + ": invalid emergy graph"};
  }
  return g;
}

TargetArc parse_arc(const std::string& text, const EmergyGraph& g) {
  const auto comma = text.find(',');
  TargetArc arc;
  try {
    if (comma == std::string::npos) throw std::invalid_argument("missing comma");
    std::size_t used = 0;
    const std::string tail = text.substr(0, comma);
    const std::string head = text.substr(comma + 1);
    if (tail.empty() || head.empty() || tail.front() == '-' || head.front() == '-') {
      throw std::invalid_argument("bad id");
    }
    arc.tail = std::stoull(tail, &used);
    if (used != tail.size()) throw std::invalid_argument("bad id");
    arc.head = std::stoull(head, &used);
    if (used != head.size()) throw std::invalid_argument("bad id");
  } catch (const std::exception&) {
    throw Exit{kUsage, "--arc expects L,LP, got '" + text + "'"};
  }
  try {
    require_target_arc(g, arc);
  } catch (const std::invalid_argument& e) {
    throw Exit{kUsage, e.what()};
  }
  return arc;
}

std::string arc_name(const TargetArc& arc) {
  return "(" + std::to_string(arc.tail) + "," + std::to_string(arc.head) + ")";
}

std::string join_nodes(const std::vector<NodeId>& nodes) {
  std::string out;
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(nodes[k]);
  }
  return out;
}

std::string exact_and_decimal(const Rational& r, int precision) { return r.str() + " (" + r.decimal(precision) + ")"; }

bool is_bundled_fig1(const EmergyGraph& g, const TargetArc& arc) {
  return arc == TargetArc{4, 7} && serialize_graph(g) == serialize_graph(fixtures::fig1());
}

// ---------------------------------------------------------------------------
// Commands

int cmd_validate(const std::string& file, std::ostream& out) {
  const EmergyGraph g = load_graph(file);
  const auto violations = validate_graph(g);
  for (const auto& v : violations) out << "violation: " << v.message << '\n';
  if (!violations.empty()) return kFailure;
  out << "valid: " << g.node_count() << " nodes, " << g.arc_count() << " arcs\n";
  return kOk;
}

int cmd_paths(const std::string& file, const std::string& arc_text, const std::string& format, int precision,
              std::ostream& out) {
  const EmergyGraph g = load_valid_graph(file, out);
  const TargetArc arc = parse_arc(arc_text, g);
  const auto paths = enumerate_emergy_paths(g, arc);
  if (format == "records") {
    for (const auto& p : paths) {
      out << "path=" << join_nodes(p.nodes) << " source=" << p.source() << " arcs=" << p.arc_count()
          << " phi=" << p.phi.str() << '\n';
    }
    return kOk;
  }
  out << paths.size() << " emergy paths ending with " << arc_name(arc) << '\n';
  for (const auto& p : paths) out << format_nodes(p.nodes) << "  phi = " << exact_and_decimal(p.phi, precision) << '\n';
  return kOk;
}

struct SolveOptions {
  std::string file;
  std::string arc;
  std::string method = "auto";
  bool state = false;
  std::string period;
  int precision = 2;
  bool timing = false;
  std::size_t brute_cap = kDefaultBruteForceCap;
};

int cmd_solve(const SolveOptions& opt, std::ostream& out) {
  std::optional<Rational> period;
  if (!opt.period.empty()) {
    try {
      period = Rational::parse(opt.period);
    } catch (const std::exception&) {
      throw Exit{kUsage, "--period expects a positive rational, got '" + opt.period + "'"};
    }
    if (period->sign() <= 0) throw Exit{kUsage, "--period must be positive"};
  }
  const EmergyGraph g = load_valid_graph(opt.file, out);
  const TargetArc arc = parse_arc(opt.arc, g);

  SolveMethod method = SolveMethod::Auto;
  if (opt.method == "cotree") method = SolveMethod::Cotree;
  if (opt.method == "dag") method = SolveMethod::Dag;
  if (opt.method == "brute") method = SolveMethod::Brute;
  if (method == SolveMethod::Auto) {
    method = topological_order(g).acyclic() ? SolveMethod::Dag : SolveMethod::Cotree;
  }

  const auto started = std::chrono::steady_clock::now();
  std::optional<SolveResult> result;
  Rational value;
  try {
    switch (method) {
      case SolveMethod::Dag:
        value = solve_dag(g, arc);
        break;
      case SolveMethod::Brute:
        result = brute_force_solve(g, arc, opt.brute_cap);
        break;
      default:
        result = solve_general(g, arc);
        break;
    }
  } catch (const CyclicGraphError& e) {
    throw Exit{kMethodMismatch, std::string("method dag needs an acyclic graph: ") + e.what()};
  } catch (const std::length_error& e) {
    throw Exit{kMethodMismatch, e.what()};
  }
  const auto elapsed = std::chrono::steady_clock::now() - started;
  if (result) value = result->value;

  out << "Em = " << exact_and_decimal(value, opt.precision) << '\n';
  out << "method = " << to_string(method) << '\n';
  if (result) out << "paths = " << result->stats.path_count << '\n';
  if (period) out << "empower = " << exact_and_decimal(value / *period, opt.precision) << '\n';
  if (opt.timing) {
    out << "elapsed_ms = " << std::fixed << std::setprecision(3)
        << std::chrono::duration<double, std::milli>(elapsed).count() << '\n';
    out.unsetf(std::ios::floatfield);
  }
  if (opt.state) {
    if (result) {
      out << "state: " << result->witness.paths.size() << " paths\n";
      for (const auto& p : result->witness.paths) {
        out << "  " << format_nodes(p.nodes) << "  phi = " << p.phi.str() << '\n';
      }
    } else {
      out << "state: not produced by method dag (use --method cotree)\n";
    }
  }
  if (is_bundled_fig1(g, arc)) {
    out << "note: the published worked example reports " << fixtures::kFig1PublishedValue
        << " sej here; it keeps a single path among those that diverge at split node 8, "
           "which the compatibility rule does not require\n";
  }
  return kOk;
}

int cmd_check_cograph(const std::string& file, const std::string& arc_text, std::size_t cap, std::ostream& out) {
  const EmergyGraph g = load_valid_graph(file, out);
  const TargetArc arc = parse_arc(arc_text, g);
  const auto paths = enumerate_emergy_paths(g, arc);
  if (paths.size() > cap) {
    throw Exit{kUsage,
               std::to_string(paths.size()) + " emergy paths exceed the P4 check cap of " + std::to_string(cap)};
  }
  return report_cograph(build_compatibility_graph(g, arc), out, cap);
}

int cmd_count_paths(const std::string& file, const std::string& method, std::size_t max_vertices, std::ostream& out) {
  const Digraph d = load_digraph(file);
  const bool want_reduction = method != "dfs";
  const bool want_dfs = method != "reduction";

  std::optional<ReductionCount> reduced;
  if (want_reduction) {
    try {
      reduced = count_via_reduction(d, max_vertices);
    } catch (const std::length_error& e) {
      throw Exit{kUsage, e.what()};
    }
    out << "B = " << reduced->bound.get_str() << '\n';
    out << "Em = " << reduced->empower.str() << '\n';
    out << "E' = " << reduced->eprime.str() << '\n';
    for (std::size_t i = PathCountVector::kFirstIndex; i < PathCountVector::kFirstIndex + reduced->counts.digits.size();
         ++i) {
      out << "n_" << i << " = " << reduced->counts.at(i).get_str() << '\n';
    }
  }
  std::vector<BigInt> by_length;
  BigInt dfs_total = 0;
  if (want_dfs) {
    by_length = count_simple_paths_by_length(d);
    for (std::size_t k = 0; k < by_length.size(); ++k) {
      if (by_length[k] != 0) out << "arcs " << k << ": " << by_length[k].get_str() << '\n';
      dfs_total += by_length[k];
    }
  }

  if (!want_dfs) {
    out << "count = " << reduced->counts.total().get_str() << '\n';
    return kOk;
  }
  if (!want_reduction) {
    out << "count = " << dfs_total.get_str() << '\n';
    return kOk;
  }
  out << "reduction = " << reduced->counts.total().get_str() << '\n';
  out << "dfs = " << dfs_total.get_str() << '\n';
  bool agree = reduced->counts.total() == dfs_total;
  for (std::size_t k = 0; k < by_length.size(); ++k) {
    if (reduced->counts.at(k + PathCountVector::kFirstIndex) != by_length[k]) agree = false;
  }
  out << (agree ? "agree" : "MISMATCH") << '\n';
  return agree ? kOk : kFailure;
}

struct GenOptions {
  std::string family;
  std::uint64_t seed = 1;
  unsigned length = 3;
  std::string theta = "100";
  unsigned nodes = 10;
  double density = 0.4;
  unsigned back_arcs = 1;
  double coproduct_ratio = 0.3;
  std::string digraph;
  unsigned vertices = 5;
};

int cmd_gen(const GenOptions& opt, std::ostream& out) {
  if (opt.family == "diamond-chain") {
    Rational theta;
    try {
      theta = Rational::parse(opt.theta);
    } catch (const std::exception&) {
      throw Exit{kUsage, "--theta expects a rational"};
    }
    if (theta.sign() <= 0) throw Exit{kUsage, "--theta must be positive"};
    const TargetArc t = diamond_chain_target(opt.length);
    out << "# diamond-chain length " << opt.length << '\n';
    out << "# target " << t.tail << ' ' << t.head << '\n';
    out << serialize_graph(diamond_chain(opt.length, theta));
    return kOk;
  }
  if (opt.family == "random-dag" || opt.family == "random-cyclic") {
    RandomGraphOptions ro;
    ro.nodes = opt.nodes;
    ro.arc_density = opt.density;
    ro.coproduct_ratio = opt.coproduct_ratio;
    ro.back_arcs = opt.family == "random-cyclic" ? opt.back_arcs : 0;
    if (opt.family == "random-cyclic" && ro.back_arcs == 0) throw Exit{kUsage, "random-cyclic needs --back-arcs >= 1"};
    EmergyGraph g;
    try {
      g = random_emergy_graph(ro, opt.seed);
    } catch (const std::invalid_argument& e) {
      throw Exit{kUsage, e.what()};
    }
    out << "# " << opt.family << " nodes " << opt.nodes << " seed " << opt.seed << '\n';
    out << serialize_graph(g);
    return kOk;
  }
  if (opt.family == "reduction") {
    if (opt.digraph.empty()) throw Exit{kUsage, "reduction needs --digraph FILE"};
    const ReductionInstance inst = build_reduction(load_digraph(opt.digraph));
    out << "# reduction B " << inst.bound.get_str() << '\n';
    out << "# target " << inst.target.tail << ' ' << inst.target.head << '\n';
    out << serialize_graph(inst.graph);
    return kOk;
  }
  if (opt.family == "random-digraph") {
    if (opt.vertices < 2) throw Exit{kUsage, "random-digraph needs --vertices >= 2"};
    out << serialize_digraph(random_digraph(opt.vertices, opt.density, opt.seed));
    return kOk;
  }
  throw Exit{kUsage, "unknown family '" + opt.family + "'"};
}

}  // namespace

int report_cograph(const CompatibilityGraph& cg, std::ostream& out, std::size_t vertex_cap) {
  out << cg.vertex_count() << " vertices, " << cg.edge_count() << " edges\n";
  const P4Check check = find_induced_p4(cg, vertex_cap);
  if (check.p4_free) {
    out << "P4-free\n";
    return kOk;
  }
  out << "induced P4:";
  for (std::size_t v : *check.witness) {
    const auto& nodes = cg.vertices()[v].nodes;
    out << ' ' << (nodes.empty() ? "#" + std::to_string(v) : format_nodes(nodes));
  }
  out << '\n';
  return kFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact maximum empower solver for emergy graphs", "empower"};
  app.require_subcommand(1);

  std::string file;
  std::string arc;
  int precision = 2;

  auto* validate = app.add_subcommand("validate", "Check the structural rules of an emergy graph");
  validate->add_option("file", file, "Emergy graph file")->required();

  std::string format = "text";
  auto* paths = app.add_subcommand("paths", "List the emergy paths ending with an arc");
  paths->add_option("file", file, "Emergy graph file")->required();
  paths->add_option("--arc", arc, "Target arc L,LP")->required();
  paths->add_option("--format", format, "text or records")->check(CLI::IsMember({"text", "records"}));
  paths->add_option("--precision", precision, "Decimal places")->check(CLI::Range(0, 50));

  SolveOptions solve_opt;
  auto* solve = app.add_subcommand("solve", "Maximum empower on an arc");
  solve->add_option("file", solve_opt.file, "Emergy graph file")->required();
  solve->add_option("--arc", solve_opt.arc, "Target arc L,LP")->required();
  solve->add_option("--method", solve_opt.method, "auto, cotree, dag or brute")
      ->check(CLI::IsMember({"auto", "cotree", "dag", "brute"}));
  solve->add_flag("--state", solve_opt.state, "Print the optimal emergy state");
  solve->add_option("--period", solve_opt.period, "Period D; prints empower = Em/D");
  solve->add_option("--precision", solve_opt.precision, "Decimal places")->check(CLI::Range(0, 50));
  solve->add_flag("--timing", solve_opt.timing, "Report solver wall time");
  solve->add_option("--brute-cap", solve_opt.brute_cap, "Path cap for --method brute");

  std::size_t p4_cap = kDefaultP4VertexCap;
  auto* cograph = app.add_subcommand("check-cograph", "Check the compatibility graph for induced P4s");
  cograph->add_option("file", file, "Emergy graph file")->required();
  cograph->add_option("--arc", arc, "Target arc L,LP")->required();
  cograph->add_option("--cap", p4_cap, "Maximum number of paths");

  std::string count_method = "both";
  std::size_t max_vertices = kDefaultReductionVertexCap;
  auto* count = app.add_subcommand("count-paths", "Count simple start-target paths of a digraph");
  count->add_option("file", file, "Digraph file")->required();
  count->add_option("--method", count_method, "reduction, dfs or both")
      ->check(CLI::IsMember({"reduction", "dfs", "both"}));
  count->add_option("--max-vertices", max_vertices, "Vertex cap for the reduction");

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "Generate an instance on standard output");
  gen->add_option("--family", gen_opt.family, "diamond-chain, random-dag, random-cyclic, reduction, random-digraph")
      ->required();
  gen->add_option("--seed", gen_opt.seed, "Random seed");
  gen->add_option("--length", gen_opt.length, "diamond-chain layers");
  gen->add_option("--theta", gen_opt.theta, "diamond-chain source emergy");
  gen->add_option("--nodes", gen_opt.nodes, "random-dag/random-cyclic node count");
  gen->add_option("--density", gen_opt.density, "Arc probability")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--back-arcs", gen_opt.back_arcs, "random-cyclic back arcs");
  gen->add_option("--coproduct-ratio", gen_opt.coproduct_ratio, "Share of co-product nodes")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--digraph", gen_opt.digraph, "Digraph file for the reduction family");
  gen->add_option("--vertices", gen_opt.vertices, "random-digraph vertex count");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(file, out);
    if (*paths) return cmd_paths(file, arc, format, precision, out);
    if (*solve) return cmd_solve(solve_opt, out);
    if (*cograph) return cmd_check_cograph(file, arc, p4_cap, out);
    if (*count) return cmd_count_paths(file, count_method, max_vertices, out);
    if (*gen) return cmd_gen(gen_opt, out);
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace emergy::cli
