#ifndef TREESPAN_GRAPH_HPP_
#define TREESPAN_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace treespan {

using Edge = std::pair<int, int>;  // stored normalized, first < second

// Sentinel for "no vertex" / "unreachable"; never a large magic number.
inline constexpr int kNoVertex = -1;
inline constexpr int kUnreachable = -1;

/// Undirected simple graph over dense 0-based vertex ids.
/// Immutable after construction; safe to read from multiple threads.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, const std::vector<Edge>& edges) : Graph(n, std::span<const Edge>(edges)) {}

  int n() const { return n_; }
  int m() const { return m_; }

  std::span<const int> neighbors(int v) const {
    return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
  }
  int degree(int v) const { return offset_[v + 1] - offset_[v]; }
  bool has_edge(int u, int v) const;

  /// All edges, normalized u < v, sorted.
  std::vector<Edge> edges() const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<int> offset_;  // n_+1 entries into adj_
  std::vector<int> adj_;     // neighbor lists, each sorted ascending
};

struct BfsResult {
  std::vector<int> dist;    // kUnreachable where not reached
  std::vector<int> parent;  // kNoVertex for sources and unreached vertices
};

/// Multi-source BFS. dist[v] = min over sources s of d_G(s, v).
/// Parent edges form a forest rooted in the sources; the parent of v is the
/// smallest-id neighbor of v at depth dist[v] - 1, so results are fully
/// deterministic.
BfsResult bfs(const Graph& g, std::span<const int> sources);
BfsResult bfs(const Graph& g, int source);

/// Exact all-pairs hop distances, one BFS per vertex.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<int> data) : n_(n), d_(std::move(data)) {}

  int n() const { return n_; }
  int at(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
  std::span<const int> row(int u) const {
    return {d_.data() + static_cast<size_t>(u) * n_, static_cast<size_t>(n_)};
  }

 private:
  int n_ = 0;
  std::vector<int> d_;
};

DistanceMatrix apsp(const Graph& g);

/// True iff a BFS from vertex 0 reaches every vertex. Throws on n = 0.
bool is_connected(const Graph& g);

/// rad_G(U): the smallest r such that some vertex of G (any vertex, not
/// necessarily in U) is within distance r of all of U. kUnreachable when no
/// finite center exists.
int radius_of_set(const Graph& g, const DistanceMatrix& dm, std::span<const int> u_set);

/// Matrix-free variant: runs one BFS per candidate center.
int radius_of_set(const Graph& g, std::span<const int> u_set);

}  // namespace treespan

#endif  // TREESPAN_GRAPH_HPP_
