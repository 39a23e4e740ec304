#include "treespan/treedec.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "treespan/errors.hpp"

namespace treespan {

namespace {

std::string name(int v) { return std::to_string(v); }

bool host_is_tree(const Graph& host) {
  if (host.n() == 0) return false;
  if (host.m() != host.n() - 1) return false;
  return is_connected(host);
}

}  // namespace

TreeDecomposition::TreeDecomposition(Graph host_tree, std::vector<std::vector<int>> bags, int g_n)
    : host_(std::move(host_tree)), bags_(std::move(bags)), g_n_(g_n) {
  if (g_n_ < 0) throw std::invalid_argument("tree decomposition: negative graph order");
  if (static_cast<int>(bags_.size()) != host_.n())
    throw std::invalid_argument("tree decomposition: one bag per host node required");
  for (auto& b : bags_) {
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    if (!b.empty() && b.front() < 0)
      throw std::out_of_range("tree decomposition: negative vertex in bag");
  }
}

std::vector<Violation> validate(const TreeDecomposition& td, const Graph& g) {
  if (td.g_n() != g.n())
    throw std::invalid_argument("validate: decomposition built for order " +
                                name(td.g_n()) + ", graph has order " + name(g.n()));
  for (int t = 0; t < static_cast<int>(td.bags().size()); ++t)
    for (int v : td.bag(t))
      if (v >= g.n())
        throw std::out_of_range("validate: bag " + name(t) + " references vertex " + name(v));

  std::vector<Violation> out;
  const Graph& host = td.host();
  if (!host_is_tree(host)) {
    out.push_back({Violation::Kind::HostNotTree,
                   "host graph is not a tree (" + name(host.n()) + " nodes, " +
                       name(host.m()) + " edges)"});
    return out;
  }

  // nodes_of[v] = host nodes whose bag contains v, ascending.
  std::vector<std::vector<int>> nodes_of(g.n());
  for (int t = 0; t < host.n(); ++t)
    for (int v : td.bag(t)) nodes_of[v].push_back(t);

  for (int v = 0; v < g.n(); ++v) {
    if (nodes_of[v].empty()) {
      out.push_back({Violation::Kind::VertexUncovered, "vertex " + name(v) + " is in no bag"});
      continue;
    }
    // BFS over host restricted to nodes containing v.
    std::vector<char> member(host.n(), 0);
    for (int t : nodes_of[v]) member[t] = 1;
    std::vector<int> queue = {nodes_of[v].front()};
    std::vector<char> seen(host.n(), 0);
    seen[queue[0]] = 1;
    size_t reached = 1;
    for (size_t head = 0; head < queue.size(); ++head)
      for (int t : host.neighbors(queue[head]))
        if (member[t] && !seen[t]) {
          seen[t] = 1;
          ++reached;
          queue.push_back(t);
        }
    if (reached != nodes_of[v].size()) {
      std::string nodes;
      for (int t : nodes_of[v]) nodes += (nodes.empty() ? "" : ",") + name(t);
      out.push_back({Violation::Kind::VertexSubtreeDisconnected,
                     "vertex " + name(v) + " appears in disconnected host nodes {" + nodes + "}"});
    }
  }

  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (int t : nodes_of[u]) {
      const auto& b = td.bag(t);
      if (std::binary_search(b.begin(), b.end(), v)) {
        covered = true;
        break;
      }
    }
    if (!covered)
      out.push_back({Violation::Kind::EdgeUncovered,
                     "edge " + name(u) + "-" + name(v) + " is contained in no bag"});
  }
  return out;
}

int breadth(const TreeDecomposition& td, const Graph& g, const DistanceMatrix& dm) {
  int best = 0;
  for (const auto& b : td.bags()) {
    if (b.empty()) continue;
    int r = radius_of_set(g, dm, b);
    if (r == kUnreachable)
      throw InvalidDecompositionError("breadth: bag has no finite-radius center");
    best = std::max(best, r);
  }
  return best;
}

int breadth(const TreeDecomposition& td, const Graph& g) {
  int nbags = static_cast<int>(td.bags().size());
  std::vector<int> bag_radius(nbags, kUnreachable);
  std::vector<int> queue;
  std::vector<int> dist(g.n());
  queue.reserve(g.n());
  for (int c = 0; c < g.n(); ++c) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    queue.clear();
    dist[c] = 0;
    queue.push_back(c);
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int v : g.neighbors(u)) {
        if (dist[v] != kUnreachable) continue;
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
    for (int t = 0; t < nbags; ++t) {
      int ecc = 0;
      for (int v : td.bag(t)) {
        int d = dist[v];
        if (d == kUnreachable) {
          ecc = kUnreachable;
          break;
        }
        ecc = std::max(ecc, d);
      }
      if (ecc == kUnreachable) continue;
      if (bag_radius[t] == kUnreachable || ecc < bag_radius[t]) bag_radius[t] = ecc;
    }
  }
  int best = 0;
  for (int t = 0; t < nbags; ++t) {
    if (td.bag(t).empty()) continue;
    if (bag_radius[t] == kUnreachable)
      throw InvalidDecompositionError("breadth: bag " + name(t) + " has no finite-radius center");
    best = std::max(best, bag_radius[t]);
  }
  return best;
}

TreeDecomposition normalize(const TreeDecomposition& td) {
  int t_n = td.host().n();
  std::vector<char> alive(t_n, 1);
  std::vector<std::set<int>> adj(t_n);
  for (auto [a, b] : td.host().edges()) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<std::vector<int>> bags = td.bags();

  auto contract = [&](int s, int t) {
    // Node t absorbs s.
    adj[t].erase(s);
    for (int x : adj[s]) {
      if (x == t) continue;
      adj[x].erase(s);
      adj[x].insert(t);
      adj[t].insert(x);
    }
    adj[s].clear();
    alive[s] = 0;
  };

  bool changed = true;
  while (changed) {
    changed = false;
    // Scan current edges in increasing (a, b) id order; restart after a hit.
    for (int a = 0; a < t_n && !changed; ++a) {
      if (!alive[a]) continue;
      for (int b : adj[a]) {
        if (b < a) continue;
        bool a_in_b = std::includes(bags[b].begin(), bags[b].end(), bags[a].begin(), bags[a].end());
        if (a_in_b) {
          contract(a, b);
          changed = true;
          break;
        }
        bool b_in_a = std::includes(bags[a].begin(), bags[a].end(), bags[b].begin(), bags[b].end());
        if (b_in_a) {
          contract(b, a);
          changed = true;
          break;
        }
      }
    }
  }

  std::vector<int> id(t_n, kNoVertex);
  std::vector<std::vector<int>> new_bags;
  int next = 0;
  for (int t = 0; t < t_n; ++t)
    if (alive[t]) {
      id[t] = next++;
      new_bags.push_back(std::move(bags[t]));
    }
  std::vector<Edge> new_edges;
  for (int t = 0; t < t_n; ++t)
    if (alive[t])
      for (int x : adj[t])
        if (t < x) new_edges.emplace_back(id[t], id[x]);
  if (td.g_n() >= 1 && next > td.g_n())
    throw InvalidDecompositionError("normalize: contraction left " + name(next) +
                                    " host nodes for a graph of order " + name(td.g_n()));
  return TreeDecomposition(Graph(next, new_edges), std::move(new_bags), td.g_n());
}

TreeDecomposition from_multiplicative_spanner(const Graph& g, const SubtreeOfGraph& t, int k) {
  if (!t.spanning() || t.host_n() != g.n())
    throw NotSpanningTreeError("from_multiplicative_spanner: tree does not span the graph");
  if (k < 1) throw std::invalid_argument("from_multiplicative_spanner: k must be >= 1");
  int radius = (k + 1) / 2;

  std::vector<std::vector<int>> bags(g.n());
  std::vector<int> queue;
  std::vector<int> dist(g.n());
  for (int u = 0; u < g.n(); ++u) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    queue.clear();
    dist[u] = 0;
    queue.push_back(u);
    for (size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      if (dist[x] == radius) continue;
      for (int y : t.neighbors(x)) {
        if (dist[y] != kUnreachable) continue;
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
    bags[u] = queue;  // exactly the ball of tree-radius `radius` around u
  }
  return TreeDecomposition(Graph(g.n(), t.edges()), std::move(bags), g.n());
}

TreeDecomposition layering_decomposition(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("layering_decomposition: empty graph");
  if (!is_connected(g)) throw DisconnectedGraphError("layering_decomposition: graph is disconnected");
  auto root_bfs = bfs(g, 0);
  const auto& dist = root_bfs.dist;
  int max_layer = *std::max_element(dist.begin(), dist.end());

  std::vector<std::vector<int>> layer(max_layer + 1);
  for (int v = 0; v < g.n(); ++v) layer[dist[v]].push_back(v);

  // Edges grouped by min endpoint layer; DSU grows from the deepest layer up,
  // so at stage l components equal those of G restricted to depth >= l.
  std::vector<std::vector<Edge>> edges_at(max_layer + 1);
  for (auto [u, v] : g.edges()) edges_at[std::min(dist[u], dist[v])].emplace_back(u, v);

  std::vector<int> dsu(g.n());
  std::iota(dsu.begin(), dsu.end(), 0);
  auto find = [&](int v) {
    while (dsu[v] != v) {
      dsu[v] = dsu[dsu[v]];
      v = dsu[v];
    }
    return v;
  };

  struct Cluster {
    int layer;
    std::vector<int> members;
    int up_vertex = kNoVertex;  // one neighbor in the previous layer
  };
  std::vector<Cluster> clusters;
  std::vector<int> cluster_of(g.n(), kNoVertex);

  for (int l = max_layer; l >= 0; --l) {
    for (auto [u, v] : edges_at[l]) {
      int a = find(u), b = find(v);
      if (a != b) dsu[a] = b;
    }
    std::map<int, int> rep_to_cluster;
    for (int v : layer[l]) {
      int r = find(v);
      auto it = rep_to_cluster.find(r);
      if (it == rep_to_cluster.end()) {
        it = rep_to_cluster.emplace(r, static_cast<int>(clusters.size())).first;
        clusters.push_back({l, {}, kNoVertex});
      }
      int c = it->second;
      clusters[c].members.push_back(v);
      cluster_of[v] = c;
      if (clusters[c].up_vertex == kNoVertex && root_bfs.parent[v] != kNoVertex)
        clusters[c].up_vertex = root_bfs.parent[v];
    }
  }

  // Deterministic node order: by (layer, smallest member).
  std::vector<int> order(clusters.size());
  std::iota(order.begin(), order.end(), 0);
  for (auto& c : clusters) std::sort(c.members.begin(), c.members.end());
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (clusters[a].layer != clusters[b].layer) return clusters[a].layer < clusters[b].layer;
    return clusters[a].members.front() < clusters[b].members.front();
  });
  std::vector<int> node_id(clusters.size());
  for (int i = 0; i < static_cast<int>(order.size()); ++i) node_id[order[i]] = i;

  std::vector<std::vector<int>> bags(clusters.size());
  std::vector<Edge> host_edges;
  for (size_t c = 0; c < clusters.size(); ++c) {
    std::vector<int> bag = clusters[c].members;
    for (int v : clusters[c].members)
      for (int u : g.neighbors(v))
        if (dist[u] == clusters[c].layer - 1) bag.push_back(u);
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    bags[node_id[c]] = std::move(bag);
    if (clusters[c].up_vertex != kNoVertex)
      host_edges.emplace_back(node_id[c], node_id[cluster_of[clusters[c].up_vertex]]);
  }
  return TreeDecomposition(Graph(static_cast<int>(clusters.size()), host_edges), std::move(bags),
                           g.n());
}

}  // namespace treespan
