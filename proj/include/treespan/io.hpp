#ifndef TREESPAN_IO_HPP_
#define TREESPAN_IO_HPP_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "treespan/graph.hpp"
#include "treespan/treedec.hpp"

namespace treespan {

enum class GraphFormat { Pace, EdgeList };

/// A parsed graph plus the label space of its file, so trees and reports can
/// speak the caller's vertex names. PACE files are 1-based integers; plain
/// edge lists keep their original tokens (sorted numerically when every label
/// is a non-negative integer, lexicographically otherwise).
struct GraphFile {
  Graph graph;
  GraphFormat format = GraphFormat::Pace;
  std::vector<std::string> labels;        // vertex id -> label
  std::map<std::string, int> vertex_of;   // label -> vertex id

  std::string label(int v) const { return labels[v]; }
  int parse_vertex(const std::string& token) const;
};

GraphFile read_graph(std::istream& in, std::optional<GraphFormat> format = {});
GraphFile read_graph_file(const std::string& path, std::optional<GraphFormat> format = {});

void write_graph_pace(std::ostream& out, const Graph& g);
void write_graph_edgelist(std::ostream& out, const Graph& g,
                          const std::vector<std::string>* labels = nullptr);

/// Tree files are plain edge lists in the label space of their graph file.
std::vector<Edge> read_tree_edges(std::istream& in, const GraphFile& context);
std::vector<Edge> read_tree_edges_file(const std::string& path, const GraphFile& context);
void write_tree_edgelist(std::ostream& out, const std::vector<Edge>& edges,
                         const GraphFile& context);

/// PACE .td: `s td <bags> <max-bag-size> <n>`, `b <id> <v...>` lines, host
/// edges; all 1-based in-file. Attached empty-bag nodes are contracted away
/// at ingestion, an isolated empty bag is rejected.
TreeDecomposition read_td(std::istream& in);
TreeDecomposition read_td_file(const std::string& path);
void write_td(std::ostream& out, const TreeDecomposition& td);

std::string tree_to_dot(const std::vector<Edge>& edges, const GraphFile& context);

}  // namespace treespan

#endif  // TREESPAN_IO_HPP_
