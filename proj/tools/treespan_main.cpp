// treespan: additive tree spanners from tree decompositions of small breadth.
//
// Subcommands: build, verify, decomp {validate,breadth,normalize,from-spanner},
// tree-metrics, gen. JSON reports go to stdout, diagnostics to stderr.
//
// Exit codes: 0 success, 2 input parse failure, 3 disconnected graph,
// 4 invalid decomposition / non-spanning tree, 5 bound violation (for build,
// a bound violation means an implementation bug, not bad input).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "treespan/errors.hpp"
#include "treespan/generators.hpp"
#include "treespan/graph.hpp"
#include "treespan/io.hpp"
#include "treespan/report_json.hpp"
#include "treespan/spanner.hpp"
#include "treespan/tree_metrics.hpp"
#include "treespan/treedec.hpp"
#include "treespan/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitParse = 2;
constexpr int kExitDisconnected = 3;
constexpr int kExitInvalidInput = 4;
constexpr int kExitBoundViolation = 5;

using nlohmann::json;
using namespace treespan;

struct CommonFlags {
  std::string graph_path;
  std::string td_path;
  std::string tree_path;
  std::string out_tree;
  std::string out_report;
  std::string out_dot;
  std::string out_path;
  std::string check_level = "auto";
  std::string format = "pace";
  uint64_t seed = 0;
  int64_t sampled = 0;  // 0 means exact
  std::optional<int64_t> bound;
};

CheckLevel parse_check_level(const std::string& s) {
  if (s == "off") return CheckLevel::Off;
  if (s == "final") return CheckLevel::Final;
  if (s == "per-level") return CheckLevel::PerLevel;
  if (s == "auto") return CheckLevel::Auto;
  throw CLI::ValidationError("--check-level", "unknown level '" + s + "'");
}

json base_report(const std::string& command, uint64_t seed) {
  json j;
  j["schema"] = kReportSchema;
  j["tool"] = "treespan";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["seed"] = seed;
  return j;
}

void emit(const json& j, const std::string& out_report) {
  std::cout << j.dump(2) << "\n";
  if (!out_report.empty()) {
    std::ofstream f(out_report);
    f << j.dump(2) << "\n";
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw ParseError("cannot write file '" + path + "'");
  f << content;
}

StretchOptions stretch_options(const CommonFlags& flags) {
  StretchOptions o;
  o.sampled = flags.sampled > 0;
  o.sample_count = flags.sampled > 0 ? flags.sampled : 10000;
  o.seed = flags.seed;
  o.bound = flags.bound;
  return o;
}

int run_build(const CommonFlags& flags) {
  GraphFile gf = read_graph_file(flags.graph_path);
  bool heuristic = flags.td_path.empty();
  TreeDecomposition td = heuristic ? layering_decomposition(gf.graph)
                                   : read_td_file(flags.td_path);

  BuildOptions opts;
  opts.check = parse_check_level(flags.check_level);
  opts.stretch = stretch_options(flags);
  opts.stretch.bound.reset();  // build always checks its own guarantee
  BuildResult result = build_spanner(gf.graph, td, opts);

  json j = base_report("build", flags.seed);
  j["input"] = flags.graph_path;
  j["provenance"] = heuristic ? "heuristic-decomposition" : "input-decomposition";
  j["check_level"] = flags.check_level;
  j["n"] = gf.graph.n();
  j["m"] = gf.graph.m();
  j["rho"] = result.rho;
  j["d"] = result.depth;
  j["bound"] = result.bound;
  j["stretch"] = to_json(result.report);
  j["trace"] = to_json(result.trace);

  if (!flags.out_tree.empty()) {
    std::ostringstream tree_text;
    write_tree_edgelist(tree_text, result.spanner.edges(), gf);
    write_file(flags.out_tree, tree_text.str());
    j["out_tree"] = flags.out_tree;
  }
  if (!flags.out_dot.empty()) {
    write_file(flags.out_dot, tree_to_dot(result.spanner.edges(), gf));
    j["out_dot"] = flags.out_dot;
  }
  emit(j, flags.out_report);
  return result.report.bound_holds ? kExitOk : kExitBoundViolation;
}

int run_verify(const CommonFlags& flags) {
  GraphFile gf = read_graph_file(flags.graph_path);
  std::vector<Edge> edges = read_tree_edges_file(flags.tree_path, gf);
  if (!is_spanning_tree(gf.graph, edges))
    throw NotSpanningTreeError("verify: '" + flags.tree_path +
                               "' is not a spanning tree of the graph");
  SubtreeOfGraph t = gf.graph.n() == 1 ? SubtreeOfGraph::single_vertex(gf.graph, 0)
                                       : SubtreeOfGraph::from_edges(gf.graph, edges);
  StretchReport report = additive_stretch(gf.graph, t, stretch_options(flags));

  json j = base_report("verify", flags.seed);
  j["input"] = flags.graph_path;
  j["tree"] = flags.tree_path;
  j["stretch"] = to_json(report);
  emit(j, flags.out_report);
  return report.bound_holds ? kExitOk : kExitBoundViolation;
}

int run_decomp_validate(const CommonFlags& flags) {
  GraphFile gf = read_graph_file(flags.graph_path);
  TreeDecomposition td = read_td_file(flags.td_path);
  auto violations = validate(td, gf.graph);
  json j = base_report("decomp validate", flags.seed);
  j["valid"] = violations.empty();
  json list = json::array();
  for (const auto& v : violations) list.push_back(v.detail);
  j["violations"] = std::move(list);
  emit(j, flags.out_report);
  return violations.empty() ? kExitOk : kExitInvalidInput;
}

int run_decomp_breadth(const CommonFlags& flags) {
  GraphFile gf = read_graph_file(flags.graph_path);
  TreeDecomposition td = read_td_file(flags.td_path);
  auto violations = validate(td, gf.graph);
  if (!violations.empty())
    throw InvalidDecompositionError("breadth: invalid decomposition: " +
                                    violations.front().detail);
  json j = base_report("decomp breadth", flags.seed);
  j["breadth"] = breadth(td, gf.graph);
  j["bags"] = td.bags().size();
  emit(j, flags.out_report);
  return kExitOk;
}

int run_decomp_normalize(const CommonFlags& flags) {
  TreeDecomposition td = read_td_file(flags.td_path);
  TreeDecomposition out = normalize(td);
  json j = base_report("decomp normalize", flags.seed);
  j["bags_before"] = td.bags().size();
  j["bags_after"] = out.bags().size();
  if (!flags.out_path.empty()) {
    std::ostringstream text;
    write_td(text, out);
    write_file(flags.out_path, text.str());
    j["out"] = flags.out_path;
  }
  emit(j, flags.out_report);
  return kExitOk;
}

int run_decomp_from_spanner(const CommonFlags& flags, int k) {
  GraphFile gf = read_graph_file(flags.graph_path);
  std::vector<Edge> edges = read_tree_edges_file(flags.tree_path, gf);
  if (!is_spanning_tree(gf.graph, edges))
    throw NotSpanningTreeError("from-spanner: '" + flags.tree_path +
                               "' is not a spanning tree of the graph");
  SubtreeOfGraph t = gf.graph.n() == 1 ? SubtreeOfGraph::single_vertex(gf.graph, 0)
                                       : SubtreeOfGraph::from_edges(gf.graph, edges);
  StretchReport measured = additive_stretch(gf.graph, t);
  const Rational& mult = measured.max_multiplicative;
  if (mult.num > static_cast<int64_t>(k) * mult.den)
    throw NotSpanningTreeError("from-spanner: tree has multiplicative stretch " +
                               std::to_string(mult.num) + "/" + std::to_string(mult.den) +
                               " > k = " + std::to_string(k));
  TreeDecomposition td = from_multiplicative_spanner(gf.graph, t, k);
  json j = base_report("decomp from-spanner", flags.seed);
  j["k"] = k;
  j["breadth"] = breadth(td, gf.graph);
  j["valid"] = validate(td, gf.graph).empty();
  if (!flags.out_path.empty()) {
    std::ostringstream text;
    write_td(text, td);
    write_file(flags.out_path, text.str());
    j["out"] = flags.out_path;
  }
  emit(j, flags.out_report);
  return kExitOk;
}

int run_tree_metrics(const CommonFlags& flags) {
  GraphFile gf = read_graph_file(flags.tree_path);
  const Graph& t = gf.graph;
  if (t.n() < 1 || t.m() != t.n() - 1 || !is_connected(t))
    throw NotSpanningTreeError("tree-metrics: '" + flags.tree_path + "' is not a tree");
  NestedTreeSequence seq = nested_sequence(t);
  json j = base_report("tree-metrics", flags.seed);
  j["n"] = t.n();
  j["d"] = seq.depth;
  json sizes = json::array();
  for (const auto& level : seq.levels) sizes.push_back(level.size());
  j["level_sizes"] = std::move(sizes);
  if (t.n() <= 500)
    j["pbt"] = pbt_exact(t);
  else
    j["pbt"] = nullptr;
  emit(j, flags.out_report);
  return kExitOk;
}

struct GenParams {
  int k = 2;
  int n = 8;
  int m = -1;
  int rows = 3, cols = 3;
  int depth = 2;
};

int run_gen(const std::string& family, const GenParams& p, const CommonFlags& flags) {
  Graph g(1);
  std::optional<TreeDecomposition> td;
  if (family == "snowflake") {
    g = snowflake(p.k);
    td = snowflake_decomposition(p.k);
  } else if (family == "path") {
    g = path_graph(p.n);
  } else if (family == "cycle") {
    g = cycle_graph(p.n);
  } else if (family == "star") {
    g = star_graph(p.n);
  } else if (family == "complete") {
    g = complete_graph(p.n);
  } else if (family == "grid") {
    g = grid_graph(p.rows, p.cols);
  } else if (family == "cbt") {
    g = complete_binary_tree(p.depth);
  } else if (family == "random-tree") {
    g = random_tree(p.n, flags.seed);
  } else if (family == "random") {
    g = random_connected(p.n, p.m < 0 ? 2 * p.n : p.m, flags.seed);
  }

  json j = base_report("gen " + family, flags.seed);
  j["n"] = g.n();
  j["m"] = g.m();
  std::ostringstream text;
  if (flags.format == "edgelist")
    write_graph_edgelist(text, g);
  else
    write_graph_pace(text, g);
  write_file(flags.out_path, text.str());
  j["out"] = flags.out_path;

  if (!flags.td_path.empty()) {
    if (!td) td = layering_decomposition(g);
    std::ostringstream td_text;
    write_td(td_text, *td);
    write_file(flags.td_path, td_text.str());
    j["out_td"] = flags.td_path;
    j["td_provenance"] = family == "snowflake" ? "triangle-bags" : "layering-heuristic";
  }
  emit(j, flags.out_report);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"additive tree spanners from tree decompositions of small breadth"};
  app.require_subcommand(1);
  CommonFlags flags;
  GenParams gen_params;
  std::string gen_family;
  int from_spanner_k = 1;

  auto add_stretch_flags = [&](CLI::App* cmd) {
    cmd->add_option("--seed", flags.seed, "seed for sampled verification");
    cmd->add_option("--sampled", flags.sampled, "verify on N sampled pairs instead of exactly");
    cmd->add_flag_callback("--exact", [&] { flags.sampled = 0; },
                           "verify over all pairs (default)");
  };

  CLI::App* build = app.add_subcommand("build", "build an additive tree spanner");
  build->add_option("-g,--graph", flags.graph_path, "input graph file")->required();
  build->add_option("-d,--td", flags.td_path,
                    "tree decomposition file (omitted: BFS-layering heuristic)");
  build->add_option("--out-tree", flags.out_tree, "write the spanning tree edge list here");
  build->add_option("--out-report", flags.out_report, "write the JSON report here");
  build->add_option("--out-dot", flags.out_dot, "write the tree as DOT here");
  build->add_option("--check-level", flags.check_level,
                    "internal re-measurement: auto|off|final|per-level");
  add_stretch_flags(build);

  CLI::App* verify_cmd = app.add_subcommand("verify", "measure stretch of a spanning tree");
  verify_cmd->add_option("-g,--graph", flags.graph_path, "input graph file")->required();
  verify_cmd->add_option("-t,--tree", flags.tree_path, "spanning tree edge list")->required();
  verify_cmd->add_option("--bound", flags.bound, "additive bound to check");
  verify_cmd->add_option("--out-report", flags.out_report, "write the JSON report here");
  add_stretch_flags(verify_cmd);

  CLI::App* decomp = app.add_subcommand("decomp", "tree decomposition operations");
  decomp->require_subcommand(1);
  CLI::App* dv = decomp->add_subcommand("validate", "check both decomposition axioms");
  dv->add_option("-g,--graph", flags.graph_path)->required();
  dv->add_option("-d,--td", flags.td_path)->required();
  CLI::App* db = decomp->add_subcommand("breadth", "max over bags of rad_G(X_t)");
  db->add_option("-g,--graph", flags.graph_path)->required();
  db->add_option("-d,--td", flags.td_path)->required();
  CLI::App* dn = decomp->add_subcommand("normalize", "contract bag-subset host edges");
  dn->add_option("-d,--td", flags.td_path)->required();
  dn->add_option("-o,--out", flags.out_path, "write the normalized decomposition here");
  CLI::App* ds = decomp->add_subcommand("from-spanner",
                                        "ball decomposition from a multiplicative k-spanner");
  ds->add_option("-g,--graph", flags.graph_path)->required();
  ds->add_option("-t,--tree", flags.tree_path)->required();
  ds->add_option("-k", from_spanner_k, "multiplicative stretch bound")->required();
  ds->add_option("-o,--out", flags.out_path, "write the decomposition here");

  CLI::App* metrics = app.add_subcommand("tree-metrics",
                                         "nested sequence depth and binary-tree depth of a tree");
  metrics->add_option("-t,--tree", flags.tree_path, "tree graph file")->required();

  CLI::App* gen = app.add_subcommand("gen", "write instance files");
  gen->require_subcommand(1);
  for (const char* family : {"snowflake", "path", "cycle", "star", "complete", "grid", "cbt",
                             "random-tree", "random"}) {
    CLI::App* f = gen->add_subcommand(family);
    f->add_option("-o,--out", flags.out_path, "graph file to write")->required();
    f->add_option("--td", flags.td_path, "also write a decomposition here");
    f->add_option("--format", flags.format, "pace|edgelist");
    f->add_option("--seed", flags.seed, "generator seed");
    if (std::string(family) == "snowflake") f->add_option("-k", gen_params.k, "generation index");
    if (std::string(family) == "grid") {
      f->add_option("--rows", gen_params.rows);
      f->add_option("--cols", gen_params.cols);
    }
    if (std::string(family) == "cbt") f->add_option("--depth", gen_params.depth);
    if (std::string(family) == "random" || std::string(family) == "random-tree" ||
        std::string(family) == "path" || std::string(family) == "cycle" ||
        std::string(family) == "star" || std::string(family) == "complete")
      f->add_option("-n", gen_params.n, "order");
    if (std::string(family) == "random") f->add_option("-m", gen_params.m, "size");
    f->callback([&, family] { gen_family = family; });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return run_build(flags);
    if (verify_cmd->parsed()) return run_verify(flags);
    if (decomp->parsed()) {
      if (dv->parsed()) return run_decomp_validate(flags);
      if (db->parsed()) return run_decomp_breadth(flags);
      if (dn->parsed()) return run_decomp_normalize(flags);
      if (ds->parsed()) return run_decomp_from_spanner(flags, from_spanner_k);
    }
    if (metrics->parsed()) return run_tree_metrics(flags);
    if (gen->parsed()) return run_gen(gen_family, gen_params, flags);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DisconnectedGraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDisconnected;
  } catch (const InvalidDecompositionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const NotSpanningTreeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const BoundViolationError& e) {
    std::cerr << "error (bound violation, likely a bug): " << e.what() << "\n";
    return kExitBoundViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
