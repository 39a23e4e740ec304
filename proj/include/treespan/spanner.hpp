#ifndef TREESPAN_SPANNER_HPP_
#define TREESPAN_SPANNER_HPP_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "treespan/graph.hpp"
#include "treespan/subtree.hpp"
#include "treespan/treedec.hpp"
#include "treespan/verify.hpp"

namespace treespan {

/// How much internal re-measurement the builders do. PerLevel asserts the
/// recursion invariants after every extension (exact distance checks, cost
/// O(n*m) per level); Final verifies only the completion preconditions; Off
/// trusts the construction. Auto resolves to PerLevel below 5000 vertices.
enum class CheckLevel { Off, Final, PerLevel, Auto };

CheckLevel resolve_check_level(CheckLevel requested, int n);

/// Grows S into a subtree S' that also contains u_set, via a multi-source
/// BFS from V(S) (the implicit contraction of S to a single root) pruned to
/// the minimal subtree spanning S and u_set. Guarantees, for every u in
/// u_set, d_{S'}(u, V(S)) = d_G(u, V(S)), and new leaves only in u_set.
SubtreeOfGraph extend_subtree(const Graph& g, const SubtreeOfGraph& s,
                              std::span<const int> u_set);

/// Completion step: extends an additively tight subtree to a spanning tree.
/// With S rho_add-additive and every vertex within rho_prime of V(S), the
/// result is an additive (rho_add + 4 * rho_prime)-spanner. Preconditions are
/// re-measured unless verify_preconditions is false; violations throw.
SubtreeOfGraph complete_spanner(const Graph& g, const SubtreeOfGraph& s, int rho_add,
                                int rho_prime, bool verify_preconditions = true);

struct LevelTrace {
  int level = 0;                    // i, from d down to 0
  std::vector<int> added_targets;   // U at this level (base vertices at i = d)
  int subtree_size = 0;             // |V(S_i)|
  std::optional<int> measured_additive_slack;  // set when per-level checks ran
  double seconds = 0.0;
};

struct BuildTrace {
  int depth = 0;  // d of the (normalized) host tree
  std::vector<LevelTrace> levels;  // exactly depth + 1 entries, i = d first
};

struct CoreOptions {
  CheckLevel check = CheckLevel::Auto;
  std::optional<int> rho;              // breadth, computed when absent
  const DistanceMatrix* dm = nullptr;  // exact oracle for checks, optional
};

/// The downward recursion S_d, ..., S_0: a subtree meeting every bag of the
/// decomposition, additively tight to 16 * rho * d(T). td must be valid and
/// normalized.
std::pair<SubtreeOfGraph, BuildTrace> core_subtree(const Graph& g, const TreeDecomposition& td,
                                                   const CoreOptions& opts = {});

struct BuildOptions {
  CheckLevel check = CheckLevel::Auto;
  StretchOptions stretch;  // how the final report is measured
};

struct BuildResult {
  SubtreeOfGraph spanner;
  StretchReport report;
  BuildTrace trace;
  int rho = 0;
  int depth = 0;
  int64_t bound = 0;  // 8 * rho * (2 * depth + 1)
};

/// Full pipeline: normalize, measure breadth, build the core subtree, then
/// complete it. The report checks the spanning tree against the bound
/// 8 * rho * (2 * d(T) + 1).
BuildResult build_spanner(const Graph& g, const TreeDecomposition& td,
                          const BuildOptions& opts = {});

/// Pipeline entry from a multiplicative k-spanner: derives the ball
/// decomposition of radius ceil(k/2) and runs build_spanner. Rejects trees
/// whose measured multiplicative stretch exceeds k, naming a witness pair.
BuildResult build_from_multiplicative(const Graph& g, const SubtreeOfGraph& t, int k,
                                      const BuildOptions& opts = {});

}  // namespace treespan

#endif  // TREESPAN_SPANNER_HPP_
