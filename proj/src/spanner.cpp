#include "treespan/spanner.hpp"

#include <algorithm>
#include <chrono>
#include <string>
#include <unordered_map>

#include "treespan/errors.hpp"
#include "treespan/tree_metrics.hpp"

namespace treespan {

namespace {

std::string pair_text(int u, int v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

std::vector<int> sorted_unique(std::span<const int> xs) {
  std::vector<int> out(xs.begin(), xs.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Exact max over pairs of subtree vertices of d_S(u,v) - d_G(u,v).
int measured_additive_slack(const Graph& g, const SubtreeOfGraph& s, const DistanceMatrix* dm) {
  int worst = 0;
  const auto& vs = s.vertices();
  for (size_t i = 0; i < vs.size(); ++i) {
    int x = vs[i];
    auto ds = s.distances_from(x);
    std::vector<int> row_storage;
    const int* row;
    if (dm) {
      row = dm->row(x).data();
    } else {
      row_storage = bfs(g, x).dist;
      row = row_storage.data();
    }
    for (size_t j = i + 1; j < vs.size(); ++j) {
      int y = vs[j];
      worst = std::max(worst, ds[y] - row[y]);
    }
  }
  return worst;
}

}  // namespace

CheckLevel resolve_check_level(CheckLevel requested, int n) {
  if (requested != CheckLevel::Auto) return requested;
  return n < 5000 ? CheckLevel::PerLevel : CheckLevel::Off;
}

SubtreeOfGraph extend_subtree(const Graph& g, const SubtreeOfGraph& s,
                              std::span<const int> u_set) {
  if (s.host_n() != g.n()) throw std::invalid_argument("extend_subtree: host graph mismatch");
  std::vector<int> targets = sorted_unique(u_set);
  if (!targets.empty() && (targets.front() < 0 || targets.back() >= g.n()))
    throw std::out_of_range("extend_subtree: target vertex out of range");
  if (targets.empty()) return s;

  auto forest = bfs(g, s.vertices());
  std::vector<char> taken(g.n(), 0);
  for (int v : s.vertices()) taken[v] = 1;

  std::vector<int> vertices = s.vertices();
  std::vector<Edge> edges = s.edges();
  for (int u : targets) {
    if (forest.dist[u] == kUnreachable)
      throw DisconnectedGraphError("extend_subtree: vertex " + std::to_string(u) +
                                   " unreachable from the subtree");
    for (int w = u; !taken[w]; w = forest.parent[w]) {
      taken[w] = 1;
      vertices.push_back(w);
      edges.emplace_back(std::min(w, forest.parent[w]), std::max(w, forest.parent[w]));
    }
  }
  return SubtreeOfGraph::from_parts(g, vertices, edges);
}

SubtreeOfGraph complete_spanner(const Graph& g, const SubtreeOfGraph& s, int rho_add,
                                int rho_prime, bool verify_preconditions) {
  if (s.host_n() != g.n()) throw std::invalid_argument("complete_spanner: host graph mismatch");

  // Coverage radius is cheap to confirm; do it unconditionally.
  auto from_tree = bfs(g, s.vertices());
  for (int v = 0; v < g.n(); ++v) {
    if (from_tree.dist[v] == kUnreachable)
      throw DisconnectedGraphError("complete_spanner: vertex " + std::to_string(v) +
                                   " unreachable from the subtree");
    if (from_tree.dist[v] > rho_prime)
      throw BoundViolationError("complete_spanner: vertex " + std::to_string(v) + " is at distance " +
                                std::to_string(from_tree.dist[v]) + " > rho' = " +
                                std::to_string(rho_prime) + " from the subtree");
  }
  if (verify_preconditions) {
    int slack = measured_additive_slack(g, s, nullptr);
    if (slack > rho_add)
      throw BoundViolationError("complete_spanner: subtree is " + std::to_string(slack) +
                                "-additive, claimed " + std::to_string(rho_add));
  }

  if (s.spanning()) return s;
  std::vector<int> rest;
  rest.reserve(g.n() - s.size());
  for (int v = 0; v < g.n(); ++v)
    if (!s.contains(v)) rest.push_back(v);
  return extend_subtree(g, s, rest);
}

namespace {

struct LevelView {
  std::vector<char> member;  // over host nodes
  std::vector<int> degree;   // induced degree
  std::vector<int> leaves;   // ascending node ids
};

LevelView level_view(const Graph& host, const std::vector<int>& nodes) {
  LevelView lv;
  lv.member.assign(host.n(), 0);
  lv.degree.assign(host.n(), 0);
  for (int t : nodes) lv.member[t] = 1;
  for (int t : nodes)
    for (int x : host.neighbors(t))
      if (lv.member[x]) ++lv.degree[t];
  for (int t : nodes)
    if (lv.degree[t] <= 1) lv.leaves.push_back(t);
  return lv;
}

// Inclusion-wise minimal hitting set for the uncovered leaf bags: greedy by
// coverage count (ties to the smallest vertex id), then a reverse pruning
// pass that certifies minimality.
std::vector<int> choose_extension_targets(const TreeDecomposition& td,
                                          const std::vector<int>& uncovered_leaves) {
  std::unordered_map<int, std::vector<int>> bags_of;  // vertex -> indices into uncovered_leaves
  for (size_t i = 0; i < uncovered_leaves.size(); ++i)
    for (int v : td.bag(uncovered_leaves[i])) bags_of[v].push_back(static_cast<int>(i));

  std::vector<char> covered(uncovered_leaves.size(), 0);
  std::vector<int> picks;
  for (size_t i = 0; i < uncovered_leaves.size(); ++i) {
    if (covered[i]) continue;
    int best = kNoVertex, best_count = -1;
    for (int v : td.bag(uncovered_leaves[i])) {
      int count = 0;
      for (int j : bags_of[v]) count += !covered[j];
      if (count > best_count) {
        best_count = count;
        best = v;
      }
    }
    picks.push_back(best);
    for (int j : bags_of[best]) covered[j] = 1;
  }

  std::vector<int> hits(uncovered_leaves.size(), 0);
  for (int v : picks)
    for (int j : bags_of[v]) ++hits[j];
  std::vector<char> dropped(picks.size(), 0);
  for (int p = static_cast<int>(picks.size()) - 1; p >= 0; --p) {
    bool redundant = true;
    for (int j : bags_of[picks[p]])
      if (hits[j] < 2) {
        redundant = false;
        break;
      }
    if (redundant) {
      dropped[p] = 1;
      for (int j : bags_of[picks[p]]) --hits[j];
    }
  }
  std::vector<int> out;
  for (size_t p = 0; p < picks.size(); ++p)
    if (!dropped[p]) out.push_back(picks[p]);
  std::sort(out.begin(), out.end());
  return out;
}

struct PerLevelChecker {
  const Graph& g;
  const TreeDecomposition& td;
  const NestedTreeSequence& seq;
  const DistanceMatrix* dm;
  int rho;

  void check_bags_hit(const SubtreeOfGraph& s, int level) const {
    for (int t : seq.levels[level]) {
      bool hit = false;
      for (int v : td.bag(t))
        if (s.contains(v)) {
          hit = true;
          break;
        }
      if (!hit)
        throw BoundViolationError("level " + std::to_string(level) + ": subtree misses bag " +
                                  std::to_string(t));
    }
  }

  int check_additive(const SubtreeOfGraph& s, int level) const {
    int slack = measured_additive_slack(g, s, dm);
    int allowed = 16 * rho * (seq.depth - level);
    if (slack > allowed)
      throw BoundViolationError("level " + std::to_string(level) + ": subtree is " +
                                std::to_string(slack) + "-additive, allowed " +
                                std::to_string(allowed));
    return slack;
  }

  void check_extension_contract(const SubtreeOfGraph& before, const SubtreeOfGraph& after,
                                const std::vector<int>& targets) const {
    auto in_g = bfs(g, before.vertices());
    auto in_after = after.distances_from_set(before.vertices());
    for (int u : targets)
      if (in_g.dist[u] != in_after[u])
        throw BoundViolationError("extension lost exact distance for vertex " + std::to_string(u) +
                                  ": " + std::to_string(in_after[u]) + " vs " +
                                  std::to_string(in_g.dist[u]));
    std::vector<char> allowed(g.n(), 0);
    for (int v : before.leaves()) allowed[v] = 1;
    for (int v : targets) allowed[v] = 1;
    for (int v : after.leaves())
      if (!allowed[v])
        throw BoundViolationError("extension created leaf " + std::to_string(v) +
                                  " outside L(S) and U");
  }

  // The witness property behind the recursion: distinct leaves of S_i sit in
  // bags at distinct nodes s, t whose connecting path meets the next level.
  void check_leaf_witnesses(const SubtreeOfGraph& s, int level) const {
    if (level >= seq.depth) return;
    const auto& nodes = seq.levels[level];
    LevelView lv = level_view(td.host(), nodes);
    std::vector<char> next(td.host().n(), 0);
    for (int t : seq.levels[level + 1]) next[t] = 1;

    // Components of the level subtree with next-level nodes removed.
    std::vector<int> comp(td.host().n(), kNoVertex);
    int comp_count = 0;
    for (int t : nodes) {
      if (next[t] || comp[t] != kNoVertex) continue;
      std::vector<int> queue = {t};
      comp[t] = comp_count;
      for (size_t head = 0; head < queue.size(); ++head)
        for (int x : td.host().neighbors(queue[head]))
          if (lv.member[x] && !next[x] && comp[x] == kNoVertex) {
            comp[x] = comp_count;
            queue.push_back(x);
          }
      ++comp_count;
    }

    std::unordered_map<int, std::vector<int>> nodes_with;  // vertex -> level nodes whose bag has it
    for (int t : nodes)
      for (int v : td.bag(t)) nodes_with[v].push_back(t);

    auto leaves = s.leaves();
    for (size_t i = 0; i < leaves.size(); ++i)
      for (size_t j = i + 1; j < leaves.size(); ++j) {
        const auto& nu = nodes_with[leaves[i]];
        const auto& nv = nodes_with[leaves[j]];
        bool found = false;
        for (int a : nu) {
          for (int b : nv) {
            if (a == b) continue;
            if (next[a] || next[b] || comp[a] != comp[b]) {
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (!found)
          throw BoundViolationError("level " + std::to_string(level) +
                                    ": no witness bags for leaf pair " +
                                    pair_text(leaves[i], leaves[j]));
      }
  }
};

}  // namespace

std::pair<SubtreeOfGraph, BuildTrace> core_subtree(const Graph& g, const TreeDecomposition& td,
                                                   const CoreOptions& opts) {
  if (td.g_n() != g.n()) throw std::invalid_argument("core_subtree: graph order mismatch");
  NestedTreeSequence seq = nested_sequence(td.host());
  int d = seq.depth;
  CheckLevel check = resolve_check_level(opts.check, g.n());

  int rho = 0;
  if (check == CheckLevel::PerLevel)
    rho = opts.rho ? *opts.rho : (opts.dm ? breadth(td, g, *opts.dm) : breadth(td, g));

  PerLevelChecker checker{g, td, seq, opts.dm, rho};
  BuildTrace trace;
  trace.depth = d;

  auto base_start = std::chrono::steady_clock::now();
  const auto& top = seq.levels[d];
  std::vector<int> base_vertices;
  if (top.size() == 1) {
    const auto& bag = td.bag(top[0]);
    if (bag.empty())
      throw InvalidDecompositionError("core_subtree: empty bag at host node " +
                                      std::to_string(top[0]));
    base_vertices = {bag.front()};
  } else if (top.size() == 2) {
    auto common = intersect(td.bag(top[0]), td.bag(top[1]));
    if (common.empty())
      throw InvalidDecompositionError(
          "core_subtree: adjacent bags with empty intersection at the deepest level; "
          "not a valid decomposition of a connected graph");
    base_vertices = {common.front()};
  } else if (top.size() == 3) {
    // Terminal path a - b - c of three host nodes: start from a shortest path
    // between a vertex shared by (a, b) and one shared by (b, c); a geodesic
    // is 0-additive and meets all three bags.
    LevelView lv = level_view(td.host(), top);
    int mid = kNoVertex;
    for (int t : top)
      if (lv.degree[t] == 2) mid = t;
    int end1 = kNoVertex, end2 = kNoVertex;
    for (int t : top)
      if (t != mid) (end1 == kNoVertex ? end1 : end2) = t;
    auto left = intersect(td.bag(end1), td.bag(mid));
    auto right = intersect(td.bag(mid), td.bag(end2));
    if (left.empty() || right.empty())
      throw InvalidDecompositionError(
          "core_subtree: adjacent bags with empty intersection at the deepest level; "
          "not a valid decomposition of a connected graph");
    base_vertices = {left.front(), right.front()};
  } else {
    throw BoundViolationError("core_subtree: terminal level has " + std::to_string(top.size()) +
                              " nodes; nested sequence is malformed");
  }

  SubtreeOfGraph s = SubtreeOfGraph::single_vertex(g, base_vertices.front());
  if (base_vertices.size() > 1 && base_vertices[1] != base_vertices[0]) {
    int other[1] = {base_vertices[1]};
    s = extend_subtree(g, s, std::span<const int>(other, 1));
  }

  {
    LevelTrace lt;
    lt.level = d;
    lt.added_targets = base_vertices;
    lt.subtree_size = s.size();
    if (check == CheckLevel::PerLevel) {
      checker.check_bags_hit(s, d);
      lt.measured_additive_slack = checker.check_additive(s, d);
      checker.check_leaf_witnesses(s, d);
    }
    lt.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - base_start).count();
    trace.levels.push_back(std::move(lt));
  }

  for (int i = d; i >= 1; --i) {
    auto start = std::chrono::steady_clock::now();
    LevelView lv = level_view(td.host(), seq.levels[i - 1]);
    std::vector<int> uncovered;
    for (int t : lv.leaves) {
      bool hit = false;
      for (int v : td.bag(t))
        if (s.contains(v)) {
          hit = true;
          break;
        }
      if (!hit) {
        if (td.bag(t).empty())
          throw InvalidDecompositionError("core_subtree: empty leaf bag at host node " +
                                          std::to_string(t));
        uncovered.push_back(t);
      }
    }
    std::vector<int> targets = choose_extension_targets(td, uncovered);
    SubtreeOfGraph next = extend_subtree(g, s, targets);

    LevelTrace lt;
    lt.level = i - 1;
    lt.added_targets = targets;
    lt.subtree_size = next.size();
    if (check == CheckLevel::PerLevel) {
      checker.check_extension_contract(s, next, targets);
      checker.check_bags_hit(next, i - 1);
      lt.measured_additive_slack = checker.check_additive(next, i - 1);
      checker.check_leaf_witnesses(next, i - 1);
    }
    lt.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    trace.levels.push_back(std::move(lt));
    s = std::move(next);
  }

  if (check == CheckLevel::Final) checker.check_bags_hit(s, 0);
  return {std::move(s), std::move(trace)};
}

BuildResult build_spanner(const Graph& g, const TreeDecomposition& td, const BuildOptions& opts) {
  if (g.n() < 1) throw std::invalid_argument("build_spanner: empty graph");
  if (!is_connected(g)) throw DisconnectedGraphError("build_spanner: graph is disconnected");
  auto violations = validate(td, g);
  if (!violations.empty())
    throw InvalidDecompositionError("build_spanner: invalid decomposition (" +
                                    std::to_string(violations.size()) + " violations; first: " +
                                    violations.front().detail + ")");

  TreeDecomposition tdn = normalize(td);
  CheckLevel check = resolve_check_level(opts.check, g.n());

  // The exact oracle is worth materializing only at desk scale.
  std::optional<DistanceMatrix> dm;
  if (g.n() <= 2048) dm = apsp(g);

  int rho = dm ? breadth(tdn, g, *dm) : breadth(tdn, g);
  int depth = d_of_tree(tdn.host());

  CoreOptions core_opts;
  core_opts.check = check;
  core_opts.rho = rho;
  core_opts.dm = dm ? &*dm : nullptr;
  auto [core, trace] = core_subtree(g, tdn, core_opts);

  // The core subtree meets every bag, so no vertex is farther than 2 * rho
  // from it; re-derive by measurement and fail loudly otherwise.
  auto reach = bfs(g, core.vertices());
  for (int v = 0; v < g.n(); ++v)
    if (reach.dist[v] > 2 * rho)
      throw BoundViolationError("build_spanner: vertex " + std::to_string(v) + " is at distance " +
                                std::to_string(reach.dist[v]) + " > 2*rho = " +
                                std::to_string(2 * rho) + " from the core subtree");

  SubtreeOfGraph spanner =
      complete_spanner(g, core, 16 * rho * depth, 2 * rho, check != CheckLevel::Off);

  int64_t bound = 8LL * rho * (2LL * depth + 1);
  StretchOptions stretch = opts.stretch;
  stretch.bound = bound;
  StretchReport report = additive_stretch(g, spanner, stretch);

  BuildResult result{std::move(spanner), std::move(report), std::move(trace), rho, depth, bound};
  return result;
}

BuildResult build_from_multiplicative(const Graph& g, const SubtreeOfGraph& t, int k,
                                      const BuildOptions& opts) {
  if (!is_spanning_tree(g, t))
    throw NotSpanningTreeError("build_from_multiplicative: not a spanning tree");
  StretchReport measured = additive_stretch(g, t);
  const Rational& mult = measured.max_multiplicative;
  if (mult.num > static_cast<int64_t>(k) * mult.den)
    throw NotSpanningTreeError(
        "build_from_multiplicative: tree is not a multiplicative " + std::to_string(k) +
        "-spanner; witness pair " + pair_text(measured.witness_mult.u, measured.witness_mult.v) +
        " has stretch " + std::to_string(mult.num) + "/" + std::to_string(mult.den));
  TreeDecomposition td = from_multiplicative_spanner(g, t, k);
  return build_spanner(g, td, opts);
}

}  // namespace treespan
