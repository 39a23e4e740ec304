#ifndef TREESPAN_TREEDEC_HPP_
#define TREESPAN_TREEDEC_HPP_

#include <string>
#include <vector>

#include "treespan/graph.hpp"
#include "treespan/subtree.hpp"

namespace treespan {

/// Tree decomposition (T, (X_t)): a host tree with its own node ids 0..t-1
/// and one bag of G-vertices per node. Bags are stored sorted and deduped.
class TreeDecomposition {
 public:
  TreeDecomposition(Graph host_tree, std::vector<std::vector<int>> bags, int g_n);

  const Graph& host() const { return host_; }
  const std::vector<std::vector<int>>& bags() const { return bags_; }
  const std::vector<int>& bag(int t) const { return bags_[t]; }
  int g_n() const { return g_n_; }

 private:
  Graph host_;
  std::vector<std::vector<int>> bags_;
  int g_n_;
};

struct Violation {
  enum class Kind { HostNotTree, VertexUncovered, VertexSubtreeDisconnected, EdgeUncovered };
  Kind kind;
  std::string detail;
};

/// Empty result iff td is a valid tree decomposition of g. Each violation
/// names the broken axiom and the offending vertex/edge and tree nodes.
std::vector<Violation> validate(const TreeDecomposition& td, const Graph& g);

/// max over bags of rad_G(X_t); the rho fed to every spanner bound.
int breadth(const TreeDecomposition& td, const Graph& g, const DistanceMatrix& dm);
/// Matrix-free: streams one BFS per center, O(n * (m + total bag size)).
int breadth(const TreeDecomposition& td, const Graph& g);

/// Repeatedly contracts host edges st with X_s subseteq X_t (node t kept).
/// Idempotent; output host order <= max(1, g_n).
TreeDecomposition normalize(const TreeDecomposition& td);

/// Ball construction: host tree is t itself, bag of u is the ball of
/// tree-radius ceil(k/2) around u in t. Breadth <= ceil(k/2) whenever t is
/// a multiplicative k-spanner of g.
TreeDecomposition from_multiplicative_spanner(const Graph& g, const SubtreeOfGraph& t, int k);

/// Heuristic plumbing via BFS layering from vertex 0: host nodes are clusters
/// of a layer (connected through vertices at the same depth or deeper), bags
/// add every neighbor in the previous layer. Always valid; breadth is
/// whatever it is, report the measured value.
TreeDecomposition layering_decomposition(const Graph& g);

}  // namespace treespan

#endif  // TREESPAN_TREEDEC_HPP_
