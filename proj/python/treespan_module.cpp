#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "treespan/errors.hpp"
#include "treespan/generators.hpp"
#include "treespan/graph.hpp"
#include "treespan/io.hpp"
#include "treespan/report_json.hpp"
#include "treespan/spanner.hpp"
#include "treespan/tree_metrics.hpp"
#include "treespan/treedec.hpp"
#include "treespan/verify.hpp"

namespace py = pybind11;
using namespace treespan;

namespace {

SubtreeOfGraph tree_from_edges(const Graph& g, const std::vector<Edge>& edges) {
  if (edges.empty() && g.n() == 1) return SubtreeOfGraph::single_vertex(g, 0);
  return SubtreeOfGraph::from_edges(g, edges);
}

StretchOptions stretch_options(int64_t sampled, uint64_t seed, std::optional<int64_t> bound) {
  StretchOptions o;
  o.sampled = sampled > 0;
  o.sample_count = sampled > 0 ? sampled : 10000;
  o.seed = seed;
  o.bound = bound;
  return o;
}

CheckLevel check_from_string(const std::string& s) {
  if (s == "off") return CheckLevel::Off;
  if (s == "final") return CheckLevel::Final;
  if (s == "per-level") return CheckLevel::PerLevel;
  if (s == "auto") return CheckLevel::Auto;
  throw std::invalid_argument("check level must be auto|off|final|per-level");
}

struct PyBuildResult {
  std::vector<Edge> tree_edges;
  int rho;
  int depth;
  int64_t bound;
  int max_additive;
  bool bound_holds;
  std::string report_json;
};

PyBuildResult wrap(BuildResult&& r) {
  return {r.spanner.edges(), r.rho,  r.depth, r.bound, r.report.max_additive,
          r.report.bound_holds, to_json(r).dump()};
}

}  // namespace

PYBIND11_MODULE(_treespan, m) {
  m.doc() = "additive tree spanners from tree decompositions of small breadth";

  py::register_exception<ParseError>(m, "ParseError");
  py::register_exception<DisconnectedGraphError>(m, "DisconnectedGraphError");
  py::register_exception<InvalidDecompositionError>(m, "InvalidDecompositionError");
  py::register_exception<NotSpanningTreeError>(m, "NotSpanningTreeError");
  py::register_exception<BoundViolationError>(m, "BoundViolationError");

  py::class_<Graph>(m, "Graph")
      .def(py::init([](int n, const std::vector<Edge>& edges) { return Graph(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("n", &Graph::n)
      .def_property_readonly("m", &Graph::m)
      .def("edges", &Graph::edges)
      .def("neighbors",
           [](const Graph& g, int v) {
             auto nb = g.neighbors(v);
             return std::vector<int>(nb.begin(), nb.end());
           })
      .def("has_edge", &Graph::has_edge)
      .def("__repr__", [](const Graph& g) {
        std::ostringstream s;
        s << "Graph(n=" << g.n() << ", m=" << g.m() << ")";
        return s.str();
      });

  py::class_<TreeDecomposition>(m, "TreeDecomposition")
      .def(py::init([](int host_nodes, const std::vector<Edge>& host_edges,
                       std::vector<std::vector<int>> bags, int g_n) {
             return TreeDecomposition(Graph(host_nodes, host_edges), std::move(bags), g_n);
           }),
           py::arg("host_nodes"), py::arg("host_edges"), py::arg("bags"), py::arg("g_n"))
      .def_property_readonly("g_n", &TreeDecomposition::g_n)
      .def_property_readonly("bags", [](const TreeDecomposition& td) { return td.bags(); })
      .def_property_readonly("host_edges",
                             [](const TreeDecomposition& td) { return td.host().edges(); })
      .def("__repr__", [](const TreeDecomposition& td) {
        std::ostringstream s;
        s << "TreeDecomposition(bags=" << td.bags().size() << ", g_n=" << td.g_n() << ")";
        return s.str();
      });

  py::class_<PyBuildResult>(m, "BuildResult")
      .def_readonly("tree_edges", &PyBuildResult::tree_edges)
      .def_readonly("rho", &PyBuildResult::rho)
      .def_readonly("d", &PyBuildResult::depth)
      .def_readonly("bound", &PyBuildResult::bound)
      .def_readonly("max_additive", &PyBuildResult::max_additive)
      .def_readonly("bound_holds", &PyBuildResult::bound_holds)
      .def_readonly("report_json", &PyBuildResult::report_json);

  m.def("bfs",
        [](const Graph& g, const std::vector<int>& sources) {
          auto r = bfs(g, sources);
          return py::make_tuple(r.dist, r.parent);
        },
        py::arg("g"), py::arg("sources"), "multi-source BFS: (dist, parent)");
  m.def("apsp_matrix", [](const Graph& g) {
    auto dm = apsp(g);
    std::vector<std::vector<int>> out(g.n());
    for (int u = 0; u < g.n(); ++u) out[u].assign(dm.row(u).begin(), dm.row(u).end());
    return out;
  });
  m.def("is_connected", &is_connected);
  m.def("radius_of_set",
        [](const Graph& g, const std::vector<int>& u_set) { return radius_of_set(g, u_set); });

  m.def("validate",
        [](const TreeDecomposition& td, const Graph& g) {
          std::vector<std::string> out;
          for (const auto& v : validate(td, g)) out.push_back(v.detail);
          return out;
        },
        "violation descriptions; empty means valid");
  m.def("breadth",
        [](const TreeDecomposition& td, const Graph& g) { return breadth(td, g); });
  m.def("normalize", [](const TreeDecomposition& td) { return normalize(td); });
  m.def("from_multiplicative_spanner",
        [](const Graph& g, const std::vector<Edge>& tree_edges, int k) {
          return from_multiplicative_spanner(g, tree_from_edges(g, tree_edges), k);
        });
  m.def("layering_decomposition", &layering_decomposition);

  m.def("branch_and_leaf", [](const Graph& t, const std::vector<int>& nodes) {
    auto bl = branch_and_leaf(t, nodes);
    return py::make_tuple(bl.branches, bl.leaves);
  });
  m.def("nested_sequence", [](const Graph& t) {
    auto seq = nested_sequence(t);
    return py::make_tuple(seq.levels, seq.depth);
  });
  m.def("d_of_tree", &d_of_tree);
  m.def("pbt_exact", &pbt_exact);

  m.def("snowflake", &snowflake);
  m.def("snowflake_decomposition", &snowflake_decomposition);
  m.def("path_graph", &path_graph);
  m.def("cycle_graph", &cycle_graph);
  m.def("star_graph", &star_graph);
  m.def("complete_graph", &complete_graph);
  m.def("grid_graph", &grid_graph);
  m.def("complete_binary_tree", &complete_binary_tree);
  m.def("random_tree", &random_tree, py::arg("n"), py::arg("seed"));
  m.def("random_connected", &random_connected, py::arg("n"), py::arg("m"), py::arg("seed"));

  m.def("build_spanner",
        [](const Graph& g, std::optional<TreeDecomposition> td, const std::string& check,
           int64_t sampled, uint64_t seed) {
          BuildOptions opts;
          opts.check = check_from_string(check);
          opts.stretch = stretch_options(sampled, seed, std::nullopt);
          TreeDecomposition dec = td ? std::move(*td) : layering_decomposition(g);
          return wrap(build_spanner(g, dec, opts));
        },
        py::arg("g"), py::arg("td") = std::nullopt, py::arg("check") = "auto",
        py::arg("sampled") = 0, py::arg("seed") = 0,
        "full pipeline; td omitted means the BFS-layering heuristic");
  m.def("build_from_multiplicative",
        [](const Graph& g, const std::vector<Edge>& tree_edges, int k, const std::string& check) {
          BuildOptions opts;
          opts.check = check_from_string(check);
          return wrap(build_from_multiplicative(g, tree_from_edges(g, tree_edges), k, opts));
        },
        py::arg("g"), py::arg("tree_edges"), py::arg("k"), py::arg("check") = "auto");

  m.def("additive_stretch",
        [](const Graph& g, const std::vector<Edge>& tree_edges, int64_t sampled, uint64_t seed,
           std::optional<int64_t> bound) {
          auto r = additive_stretch(g, tree_from_edges(g, tree_edges),
                                    stretch_options(sampled, seed, bound));
          return to_json(r).dump();
        },
        py::arg("g"), py::arg("tree_edges"), py::arg("sampled") = 0, py::arg("seed") = 0,
        py::arg("bound") = std::nullopt, "JSON stretch report");
  m.def("multiplicative_stretch", [](const Graph& g, const std::vector<Edge>& tree_edges) {
    Rational r = multiplicative_stretch(g, tree_from_edges(g, tree_edges));
    return py::make_tuple(r.num, r.den);
  });
  m.def("is_spanning_tree", [](const Graph& g, const std::vector<Edge>& edges) {
    return is_spanning_tree(g, edges);
  });
  m.def("min_additive_tree_stretch_bruteforce",
        [](const Graph& g, uint64_t budget) {
          auto r = min_additive_tree_stretch_bruteforce(g, budget);
          py::dict d;
          d["conclusive"] = r.conclusive;
          d["min_additive"] = r.conclusive ? py::cast(r.min_additive) : py::none();
          d["trees_enumerated"] = r.trees_enumerated;
          d["budget"] = r.budget;
          return d;
        },
        py::arg("g"), py::arg("budget") = 1000000);

  m.attr("__version__") = kToolVersion;
}
