#ifndef TREESPAN_VERIFY_HPP_
#define TREESPAN_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "treespan/graph.hpp"
#include "treespan/subtree.hpp"

namespace treespan {

/// Exact ratio, kept as a reduced fraction so stretch comparisons never
/// round. den == 1 for tree-equals-graph instances.
struct Rational {
  int64_t num = 0;
  int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

struct VertexPair {
  int u = kNoVertex;
  int v = kNoVertex;
};

struct StretchReport {
  int max_additive = 0;
  Rational max_multiplicative{1, 1};
  VertexPair witness_add;
  VertexPair witness_mult;
  std::optional<int64_t> bound_checked;
  bool bound_holds = true;
  int64_t pairs_checked = 0;
  std::string mode = "exact";  // "exact" or "sampled"
  uint64_t seed = 0;           // sampled mode only
};

struct StretchOptions {
  bool sampled = false;
  uint64_t seed = 0;
  int64_t sample_count = 10000;
  std::optional<int64_t> bound;  // additive bound to check, if any
};

/// Max over vertex pairs of d_T - d_G (and of d_T / d_G). Exact mode scans
/// all pairs via one BFS per vertex; sampled mode draws seeded pairs and
/// reports a lower bound on the true maxima.
StretchReport additive_stretch(const Graph& g, const SubtreeOfGraph& t,
                               const StretchOptions& opts = {});

/// Exact multiplicative stretch max d_T(u,v) / d_G(u,v).
Rational multiplicative_stretch(const Graph& g, const SubtreeOfGraph& t);

bool is_spanning_tree(const Graph& g, const SubtreeOfGraph& t);
/// Raw-candidate form: tolerates arbitrary edge lists (non-tree, non-subgraph).
bool is_spanning_tree(const Graph& g, const std::vector<Edge>& edges);

struct MinStretchResult {
  bool conclusive = false;
  int min_additive = -1;        // valid when conclusive
  uint64_t trees_enumerated = 0;
  uint64_t budget = 0;
};

/// Enumerates every spanning tree (edge inclusion/exclusion with
/// connectivity pruning) and minimizes exact additive stretch; the oracle
/// behind lower-bound claims. Stops as inconclusive when the budget is hit.
/// Refuses instances with more than 16 vertices.
MinStretchResult min_additive_tree_stretch_bruteforce(const Graph& g, uint64_t budget = 1000000);

}  // namespace treespan

#endif  // TREESPAN_VERIFY_HPP_
