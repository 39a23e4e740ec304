#include "treespan/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace treespan {

namespace {

// Bounded draw on top of mt19937_64; avoids std::uniform_int_distribution,
// whose output differs between standard library implementations.
int draw_below(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % n); }

}  // namespace

Graph snowflake(int k) {
  if (k < 1) throw std::invalid_argument("snowflake: k must be >= 1");
  int n = 3;
  std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}};
  std::vector<int> degree = {2, 2, 2};
  for (int gen = 1; gen < k; ++gen) {
    std::vector<Edge> scan = edges;
    std::sort(scan.begin(), scan.end());
    std::vector<Edge> fresh;
    for (auto [u, v] : scan) {
      if (degree[u] != 2 && degree[v] != 2) continue;
      int w = n++;
      degree.push_back(0);
      fresh.emplace_back(u, w);
      fresh.emplace_back(v, w);
    }
    for (auto [u, v] : fresh) {
      edges.emplace_back(u, v);
      ++degree[u];
      ++degree[v];
    }
  }
  return Graph(n, edges);
}

TreeDecomposition snowflake_decomposition(int k) {
  if (k < 1) throw std::invalid_argument("snowflake_decomposition: k must be >= 1");
  int n = 3;
  std::vector<Edge> edges = {{0, 1}, {0, 2}, {1, 2}};
  std::vector<int> degree = {2, 2, 2};
  std::vector<std::vector<int>> bags = {{0, 1, 2}};
  std::vector<Edge> host_edges;
  // owner[uv] = bag of the triangle that created edge uv.
  std::map<Edge, int> owner = {{{0, 1}, 0}, {{0, 2}, 0}, {{1, 2}, 0}};

  for (int gen = 1; gen < k; ++gen) {
    std::vector<Edge> scan = edges;
    std::sort(scan.begin(), scan.end());
    std::vector<Edge> fresh;
    for (auto [u, v] : scan) {
      if (degree[u] != 2 && degree[v] != 2) continue;
      int w = n++;
      degree.push_back(0);
      int bag_id = static_cast<int>(bags.size());
      bags.push_back({u, v, w});
      host_edges.emplace_back(owner[{u, v}], bag_id);
      owner[{std::min(u, w), std::max(u, w)}] = bag_id;
      owner[{std::min(v, w), std::max(v, w)}] = bag_id;
      fresh.emplace_back(u, w);
      fresh.emplace_back(v, w);
    }
    for (auto [u, v] : fresh) {
      edges.emplace_back(u, v);
      ++degree[u];
      ++degree[v];
    }
  }
  int bag_count = static_cast<int>(bags.size());
  return TreeDecomposition(Graph(bag_count, host_edges), std::move(bags), n);
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: n must be >= 1");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph star_graph(int leaf_count) {
  if (leaf_count < 1) throw std::invalid_argument("star_graph: need at least one leaf");
  std::vector<Edge> edges;
  for (int v = 1; v <= leaf_count; ++v) edges.emplace_back(0, v);
  return Graph(leaf_count + 1, edges);
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid_graph: degenerate size");
  std::vector<Edge> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  return Graph(rows * cols, edges);
}

Graph complete_binary_tree(int depth) {
  if (depth < 0) throw std::invalid_argument("complete_binary_tree: negative depth");
  int n = (1 << (depth + 1)) - 1;
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back((v - 1) / 2, v);
  return Graph(n, edges);
}

Graph random_tree(int n, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
  if (n == 1) return Graph(1);
  if (n == 2) return Graph(2, std::vector<Edge>{{0, 1}});
  std::mt19937_64 rng(seed);
  std::vector<int> pruefer(n - 2);
  for (int& x : pruefer) x = draw_below(rng, n);

  // Standard linear decode: repeatedly attach the smallest current leaf.
  std::vector<int> deg(n, 1);
  for (int x : pruefer) ++deg[x];
  std::vector<Edge> edges;
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : pruefer) {
    edges.emplace_back(leaf, x);
    --deg[leaf];
    if (--deg[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  // Exactly two degree-1 vertices remain; they form the last edge.
  int a = kNoVertex, b = kNoVertex;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) (a == kNoVertex ? a : b) = v;
  edges.emplace_back(a, b);
  return Graph(n, edges);
}

Graph random_connected(int n, int m, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_connected: n must be >= 1");
  int64_t max_m = static_cast<int64_t>(n) * (n - 1) / 2;
  if (m < n - 1 || m > max_m)
    throw std::invalid_argument("random_connected: infeasible size m=" + std::to_string(m));
  Graph tree = random_tree(n, seed);
  std::vector<Edge> edges = tree.edges();
  std::set<Edge> present(edges.begin(), edges.end());
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  while (static_cast<int>(edges.size()) < m) {
    int u = draw_below(rng, n);
    int v = draw_below(rng, n);
    if (u == v) continue;
    Edge e{std::min(u, v), std::max(u, v)};
    if (present.insert(e).second) edges.push_back(e);
  }
  return Graph(n, edges);
}

}  // namespace treespan
