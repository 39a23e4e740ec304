#ifndef TREESPAN_TREE_METRICS_HPP_
#define TREESPAN_TREE_METRICS_HPP_

#include <span>
#include <utility>
#include <vector>

#include "treespan/graph.hpp"

namespace treespan {

/// The chain T_0 > T_1 > ... > T_d of nested subtrees of a host tree:
/// levels[0] holds all nodes and each next level is the minimal subtree
/// spanning the branch vertices of the previous one; when a level degenerates
/// to a path of length >= 3, one last single-node level is appended.
struct NestedTreeSequence {
  std::vector<std::vector<int>> levels;  // node subsets, each sorted
  int depth = 0;                         // d: index of the last level
};

struct BranchLeafSets {
  std::vector<int> branches;  // degree >= 3 within the induced subtree
  std::vector<int> leaves;    // degree <= 1 (a lone node is its own leaf)
};

/// Degrees are measured within the subtree induced by `nodes`, which must be
/// connected in t.
BranchLeafSets branch_and_leaf(const Graph& t, std::span<const int> nodes);

NestedTreeSequence nested_sequence(const Graph& t);

/// Depth index of the nested sequence; drives every stretch and runtime bound.
int d_of_tree(const Graph& t);

/// Exact maximum depth of a perfect binary tree that is a topological minor
/// of t, by rooted dynamic programming over edge directions. Independent of
/// nested_sequence; intended for desk-scale trees.
int pbt_exact(const Graph& t);

}  // namespace treespan

#endif  // TREESPAN_TREE_METRICS_HPP_
