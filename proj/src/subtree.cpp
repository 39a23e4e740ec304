#include "treespan/subtree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "treespan/errors.hpp"

namespace treespan {

void SubtreeOfGraph::build_index(int host_n) {
  host_n_ = host_n;
  in_.assign(host_n, 0);
  for (int v : vertices_) in_[v] = 1;
  std::vector<int> deg(host_n, 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  offset_.assign(host_n + 1, 0);
  for (int v = 0; v < host_n; ++v) offset_[v + 1] = offset_[v] + deg[v];
  adj_.resize(offset_[host_n]);
  std::vector<int> cursor(offset_.begin(), offset_.end() - 1);
  for (auto [u, v] : edges_) {
    adj_[cursor[u]++] = v;
    adj_[cursor[v]++] = u;
  }
  for (int v : vertices_) std::sort(adj_.begin() + offset_[v], adj_.begin() + offset_[v + 1]);
}

SubtreeOfGraph SubtreeOfGraph::single_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) throw std::out_of_range("subtree: vertex out of range");
  SubtreeOfGraph s;
  s.vertices_ = {v};
  s.build_index(g.n());
  return s;
}

SubtreeOfGraph SubtreeOfGraph::from_parts(const Graph& g, std::span<const int> vertices,
                                          std::span<const Edge> edges) {
  SubtreeOfGraph s;
  s.vertices_.assign(vertices.begin(), vertices.end());
  std::sort(s.vertices_.begin(), s.vertices_.end());
  s.vertices_.erase(std::unique(s.vertices_.begin(), s.vertices_.end()), s.vertices_.end());
  for (int v : s.vertices_)
    if (v < 0 || v >= g.n()) throw std::out_of_range("subtree: vertex out of range");
  s.edges_.reserve(edges.size());
  for (auto [u, v] : edges) s.edges_.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(s.edges_.begin(), s.edges_.end());
  s.edges_.erase(std::unique(s.edges_.begin(), s.edges_.end()), s.edges_.end());

  if (s.vertices_.empty()) throw std::invalid_argument("subtree: empty vertex set");
  if (s.edges_.size() + 1 != s.vertices_.size())
    throw std::invalid_argument("subtree: not a tree (|E| != |V| - 1)");
  for (auto [u, v] : s.edges_) {
    if (!g.has_edge(u, v))
      throw std::invalid_argument("subtree: edge " + std::to_string(u) + "-" + std::to_string(v) +
                                  " not in host graph");
    if (!std::binary_search(s.vertices_.begin(), s.vertices_.end(), u) ||
        !std::binary_search(s.vertices_.begin(), s.vertices_.end(), v))
      throw std::invalid_argument("subtree: edge endpoint outside vertex set");
  }
  s.build_index(g.n());

  // |E| = |V| - 1 plus connectivity makes it a tree.
  auto dist = s.distances_from(s.vertices_.front());
  for (int v : s.vertices_)
    if (dist[v] == kUnreachable) throw std::invalid_argument("subtree: not connected");
  return s;
}

SubtreeOfGraph SubtreeOfGraph::from_edges(const Graph& g, std::span<const Edge> edges) {
  if (edges.empty()) throw std::invalid_argument("subtree: from_edges requires edges");
  std::vector<int> vs;
  vs.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    vs.push_back(u);
    vs.push_back(v);
  }
  return from_parts(g, vs, edges);
}

std::vector<int> SubtreeOfGraph::leaves() const {
  std::vector<int> out;
  for (int v : vertices_)
    if (degree(v) <= 1) out.push_back(v);
  return out;
}

std::vector<int> SubtreeOfGraph::distances_from(int source) const {
  int s[1] = {source};
  return distances_from_set(std::span<const int>(s, 1));
}

std::vector<int> SubtreeOfGraph::distances_from_set(std::span<const int> sources) const {
  if (sources.empty()) throw std::invalid_argument("subtree: empty source set");
  std::vector<int> dist(host_n_, kUnreachable);
  std::vector<int> queue;
  queue.reserve(vertices_.size());
  for (int s : sources) {
    if (!contains(s)) throw std::out_of_range("subtree: source not in subtree");
    if (dist[s] == 0) continue;
    dist[s] = 0;
    queue.push_back(s);
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v : neighbors(u)) {
      if (dist[v] != kUnreachable) continue;
      dist[v] = dist[u] + 1;
      queue.push_back(v);
    }
  }
  return dist;
}

}  // namespace treespan
