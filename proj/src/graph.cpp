#include "treespan/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

#include "treespan/errors.hpp"

namespace treespan {

Graph::Graph(int n) : n_(n), m_(0), offset_(n + 1, 0) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  std::vector<Edge> norm;
  norm.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::out_of_range("edge endpoint " + std::to_string(std::max(u, v)) +
                              " out of range for order " + std::to_string(n));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    norm.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(norm.begin(), norm.end());
  norm.erase(std::unique(norm.begin(), norm.end()), norm.end());
  m_ = static_cast<int>(norm.size());

  std::vector<int> deg(n, 0);
  for (auto [u, v] : norm) {
    ++deg[u];
    ++deg[v];
  }
  offset_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offset_[v + 1] = offset_[v] + deg[v];
  adj_.resize(offset_[n]);
  std::vector<int> cursor(offset_.begin(), offset_.end() - 1);
  for (auto [u, v] : norm) {
    adj_[cursor[u]++] = v;
    adj_[cursor[v]++] = u;
  }
  // Edges were sorted, so each neighbor list of u got its v's ascending,
  // except that v-side entries interleave; one local sort keeps the contract.
  for (int v = 0; v < n; ++v)
    std::sort(adj_.begin() + offset_[v], adj_.begin() + offset_[v + 1]);
}

bool Graph::has_edge(int u, int v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

BfsResult bfs(const Graph& g, std::span<const int> sources) {
  if (sources.empty()) throw std::invalid_argument("bfs: empty source set");
  BfsResult r;
  r.dist.assign(g.n(), kUnreachable);
  r.parent.assign(g.n(), kNoVertex);
  std::vector<int> queue;
  queue.reserve(g.n());
  for (int s : sources) {
    if (s < 0 || s >= g.n()) throw std::out_of_range("bfs: source " + std::to_string(s) + " out of range");
    if (r.dist[s] == 0) continue;
    r.dist[s] = 0;
    queue.push_back(s);
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v : g.neighbors(u)) {
      if (r.dist[v] != kUnreachable) continue;
      r.dist[v] = r.dist[u] + 1;
      queue.push_back(v);
    }
  }
  // Deterministic parents: smallest-id neighbor on the previous level.
  for (int v = 0; v < g.n(); ++v) {
    if (r.dist[v] <= 0) continue;
    for (int u : g.neighbors(v)) {
      if (r.dist[u] == r.dist[v] - 1) {
        r.parent[v] = u;  // neighbor lists are sorted, first hit is smallest
        break;
      }
    }
  }
  return r;
}

BfsResult bfs(const Graph& g, int source) {
  int s[1] = {source};
  return bfs(g, std::span<const int>(s, 1));
}

DistanceMatrix apsp(const Graph& g) {
  int n = g.n();
  std::vector<int> data(static_cast<size_t>(n) * n, kUnreachable);
  std::vector<int> queue;
  queue.reserve(n);
  for (int s = 0; s < n; ++s) {
    int* dist = data.data() + static_cast<size_t>(s) * n;
    queue.clear();
    dist[s] = 0;
    queue.push_back(s);
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int v : g.neighbors(u)) {
        if (dist[v] != kUnreachable) continue;
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return DistanceMatrix(n, std::move(data));
}

bool is_connected(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("is_connected: empty graph");
  auto r = bfs(g, 0);
  return std::find(r.dist.begin(), r.dist.end(), kUnreachable) == r.dist.end();
}

int radius_of_set(const Graph& g, const DistanceMatrix& dm, std::span<const int> u_set) {
  if (u_set.empty()) throw std::invalid_argument("radius_of_set: empty set");
  int best = kUnreachable;
  for (int c = 0; c < g.n(); ++c) {
    auto row = dm.row(c);
    int ecc = 0;
    for (int v : u_set) {
      int d = row[v];
      if (d == kUnreachable) {
        ecc = kUnreachable;
        break;
      }
      ecc = std::max(ecc, d);
    }
    if (ecc == kUnreachable) continue;
    if (best == kUnreachable || ecc < best) best = ecc;
  }
  return best;
}

int radius_of_set(const Graph& g, std::span<const int> u_set) {
  if (u_set.empty()) throw std::invalid_argument("radius_of_set: empty set");
  int best = kUnreachable;
  for (int c = 0; c < g.n(); ++c) {
    auto r = bfs(g, c);
    int ecc = 0;
    for (int v : u_set) {
      int d = r.dist[v];
      if (d == kUnreachable) {
        ecc = kUnreachable;
        break;
      }
      ecc = std::max(ecc, d);
    }
    if (ecc == kUnreachable) continue;
    if (best == kUnreachable || ecc < best) best = ecc;
  }
  return best;
}

}  // namespace treespan
