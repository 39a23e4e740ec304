#include "treespan/tree_metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace treespan {

namespace {

void require_tree(const Graph& t) {
  if (t.n() < 1) throw std::invalid_argument("tree expected, got empty graph");
  if (t.m() != t.n() - 1 || !is_connected(t))
    throw std::invalid_argument("tree expected (" + std::to_string(t.n()) + " nodes, " +
                                std::to_string(t.m()) + " edges)");
}

// Degrees within the subtree induced by the alive set.
void induced_degrees(const Graph& t, const std::vector<char>& alive, std::vector<int>& deg) {
  for (int v = 0; v < t.n(); ++v) {
    deg[v] = 0;
    if (!alive[v]) continue;
    for (int u : t.neighbors(v))
      if (alive[u]) ++deg[v];
  }
}

// Shrinks `alive` to the minimal subtree containing all keep-marked nodes by
// repeatedly pruning unmarked leaves. deg must hold induced degrees; both are
// updated in place.
void prune_to(const Graph& t, std::vector<char>& alive, std::vector<int>& deg,
              const std::vector<char>& keep, std::vector<int>& scratch) {
  scratch.clear();
  for (int v = 0; v < t.n(); ++v)
    if (alive[v] && deg[v] <= 1 && !keep[v]) scratch.push_back(v);
  for (size_t head = 0; head < scratch.size(); ++head) {
    int v = scratch[head];
    alive[v] = 0;
    for (int u : t.neighbors(v)) {
      if (!alive[u]) continue;
      if (--deg[u] <= 1 && !keep[u]) scratch.push_back(u);
    }
  }
}

// For a path given by alive flags, returns the node at floor(len/2) steps
// from the smaller-id endpoint (an internal node whenever len >= 2).
int path_median(const Graph& t, const std::vector<char>& alive, const std::vector<int>& deg,
                int path_len) {
  int start = kNoVertex;
  for (int v = 0; v < t.n(); ++v)
    if (alive[v] && deg[v] <= 1) {
      start = v;
      break;
    }
  int prev = kNoVertex, cur = start;
  for (int step = 0; step < path_len / 2; ++step) {
    for (int u : t.neighbors(cur))
      if (alive[u] && u != prev) {
        prev = cur;
        cur = u;
        break;
      }
  }
  return cur;
}

}  // namespace

BranchLeafSets branch_and_leaf(const Graph& t, std::span<const int> nodes) {
  require_tree(t);
  if (nodes.empty()) throw std::invalid_argument("branch_and_leaf: empty node set");
  std::vector<char> alive(t.n(), 0);
  for (int v : nodes) {
    if (v < 0 || v >= t.n()) throw std::out_of_range("branch_and_leaf: node out of range");
    alive[v] = 1;
  }
  // Connectivity of the induced subgraph.
  std::vector<int> queue = {nodes.front()};
  std::vector<char> seen(t.n(), 0);
  seen[nodes.front()] = 1;
  for (size_t head = 0; head < queue.size(); ++head)
    for (int u : t.neighbors(queue[head]))
      if (alive[u] && !seen[u]) {
        seen[u] = 1;
        queue.push_back(u);
      }
  for (int v : nodes)
    if (!seen[v]) throw std::invalid_argument("branch_and_leaf: nodes do not induce a subtree");

  std::vector<int> deg(t.n(), 0);
  induced_degrees(t, alive, deg);
  BranchLeafSets out;
  for (int v = 0; v < t.n(); ++v) {
    if (!alive[v]) continue;
    if (deg[v] >= 3) out.branches.push_back(v);
    if (deg[v] <= 1) out.leaves.push_back(v);
  }
  return out;
}

NestedTreeSequence nested_sequence(const Graph& t) {
  require_tree(t);
  NestedTreeSequence seq;
  std::vector<char> alive(t.n(), 1);
  std::vector<char> keep(t.n());
  std::vector<int> deg(t.n());
  std::vector<int> scratch;
  induced_degrees(t, alive, deg);

  auto snapshot = [&] {
    std::vector<int> level;
    for (int v = 0; v < t.n(); ++v)
      if (alive[v]) level.push_back(v);
    seq.levels.push_back(std::move(level));
  };
  snapshot();

  while (true) {
    int branch_count = 0;
    for (int v = 0; v < t.n(); ++v) {
      keep[v] = alive[v] && deg[v] >= 3;
      branch_count += keep[v];
    }
    if (branch_count > 0) {
      prune_to(t, alive, deg, keep, scratch);
      snapshot();
      continue;
    }
    // The current level is a path of some length len.
    int len = static_cast<int>(seq.levels.back().size()) - 1;
    if (len >= 3) {
      int median = path_median(t, alive, deg, len);
      seq.levels.push_back({median});
    }
    break;
  }
  seq.depth = static_cast<int>(seq.levels.size()) - 1;
  return seq;
}

int d_of_tree(const Graph& t) {
  require_tree(t);
  std::vector<char> alive(t.n(), 1);
  std::vector<char> keep(t.n());
  std::vector<int> deg(t.n());
  std::vector<int> scratch;
  induced_degrees(t, alive, deg);
  int levels = 0;
  int size = t.n();
  while (true) {
    int branch_count = 0;
    for (int v = 0; v < t.n(); ++v) {
      keep[v] = alive[v] && deg[v] >= 3;
      branch_count += keep[v];
    }
    if (branch_count == 0) return levels + (size - 1 >= 3 ? 1 : 0);
    prune_to(t, alive, deg, keep, scratch);
    ++levels;
    size = 0;
    for (int v = 0; v < t.n(); ++v) size += alive[v];
  }
}

int pbt_exact(const Graph& t) {
  require_tree(t);
  int n = t.n();
  if (n <= 2) return 0;

  auto order = bfs(t, 0);  // parent[] plus distances define a BFS order
  std::vector<int> by_depth(n);
  for (int v = 0; v < n; ++v) by_depth[v] = v;
  std::sort(by_depth.begin(), by_depth.end(),
            [&](int a, int b) { return order.dist[a] < order.dist[b]; });

  // down[v]: best subdivided perfect binary tree rooted inside v's subtree,
  // entered from v's parent. up[v]: same for the parent-side component.
  std::vector<int> down(n, 0), up(n, 0);
  auto combine = [](int m1, int m2, int count) {
    int best = std::max(0, m1);
    if (count >= 2) best = std::max(best, m2 + 1);
    return best;
  };

  for (int i = n - 1; i >= 0; --i) {
    int v = by_depth[i];
    int m1 = -1, m2 = -1, cnt = 0;
    for (int c : t.neighbors(v)) {
      if (c == order.parent[v]) continue;
      ++cnt;
      int val = down[c];
      if (val > m1) {
        m2 = m1;
        m1 = val;
      } else if (val > m2) {
        m2 = val;
      }
    }
    down[v] = combine(m1, m2, cnt);
  }

  int best = 0;
  for (int i = 0; i < n; ++i) {
    int v = by_depth[i];
    bool is_root = order.parent[v] == kNoVertex;
    for (int c : t.neighbors(v)) {
      if (c == order.parent[v]) continue;
      int m1 = -1, m2 = -1, cnt = 0;
      auto feed = [&](int val) {
        ++cnt;
        if (val > m1) {
          m2 = m1;
          m1 = val;
        } else if (val > m2) {
          m2 = val;
        }
      };
      if (!is_root) feed(up[v]);
      for (int c2 : t.neighbors(v)) {
        if (c2 == order.parent[v] || c2 == c) continue;
        feed(down[c2]);
      }
      up[c] = combine(m1, m2, cnt);
    }
    // Root a perfect binary tree at v using its two best directions.
    int m1 = -1, m2 = -1, cnt = 0;
    auto feed = [&](int val) {
      ++cnt;
      if (val > m1) {
        m2 = m1;
        m1 = val;
      } else if (val > m2) {
        m2 = val;
      }
    };
    if (!is_root) feed(up[v]);
    for (int c : t.neighbors(v)) {
      if (c == order.parent[v]) continue;
      feed(down[c]);
    }
    if (cnt >= 2) best = std::max(best, m2 + 1);
  }
  return best;
}

}  // namespace treespan
