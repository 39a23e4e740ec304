#ifndef TREESPAN_SUBTREE_HPP_
#define TREESPAN_SUBTREE_HPP_

#include <span>
#include <vector>

#include "treespan/graph.hpp"

namespace treespan {

/// A subgraph of a host graph that is a tree: a vertex subset plus an edge
/// subset of G, connected and acyclic. Construction validates the invariants;
/// instances are immutable afterwards.
class SubtreeOfGraph {
 public:
  static SubtreeOfGraph single_vertex(const Graph& g, int v);
  static SubtreeOfGraph from_parts(const Graph& g, std::span<const int> vertices,
                                   std::span<const Edge> edges);
  static SubtreeOfGraph from_parts(const Graph& g, const std::vector<int>& vertices,
                                   const std::vector<Edge>& edges) {
    return from_parts(g, std::span<const int>(vertices), std::span<const Edge>(edges));
  }
  /// Vertex set inferred from edge endpoints; edges must be non-empty.
  static SubtreeOfGraph from_edges(const Graph& g, std::span<const Edge> edges);
  static SubtreeOfGraph from_edges(const Graph& g, const std::vector<Edge>& edges) {
    return from_edges(g, std::span<const Edge>(edges));
  }

  int host_n() const { return host_n_; }
  int size() const { return static_cast<int>(vertices_.size()); }
  bool spanning() const { return size() == host_n_; }
  bool contains(int v) const { return v >= 0 && v < host_n_ && in_[v] != 0; }

  const std::vector<int>& vertices() const { return vertices_; }  // sorted
  const std::vector<Edge>& edges() const { return edges_; }       // sorted, u < v
  std::span<const int> neighbors(int v) const {
    return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
  }
  int degree(int v) const { return offset_[v + 1] - offset_[v]; }

  /// Members of degree <= 1 within the subtree (a lone vertex is its own leaf).
  std::vector<int> leaves() const;

  /// Hop distances within the subtree; kUnreachable outside it.
  std::vector<int> distances_from(int source) const;
  std::vector<int> distances_from_set(std::span<const int> sources) const;

 private:
  SubtreeOfGraph() = default;
  void build_index(int host_n);

  int host_n_ = 0;
  std::vector<int> vertices_;
  std::vector<Edge> edges_;
  std::vector<char> in_;
  std::vector<int> offset_;
  std::vector<int> adj_;
};

}  // namespace treespan

#endif  // TREESPAN_SUBTREE_HPP_
