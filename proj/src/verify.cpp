#include "treespan/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "treespan/errors.hpp"

namespace treespan {

namespace {

int64_t gcd64(int64_t a, int64_t b) { return std::gcd(a, b); }

struct StretchScan {
  int max_add = 0;
  VertexPair wit_add;
  int64_t mult_num = 1, mult_den = 1;
  VertexPair wit_mult;
  int64_t pairs = 0;

  void feed(int u, int v, int dg, int dt) {
    if (dg == kUnreachable || dt == kUnreachable)
      throw NotSpanningTreeError("stretch: vertex pair unreachable");
    if (dt < dg)
      throw BoundViolationError("stretch: subtree distance below graph distance");
    ++pairs;
    if (dt - dg > max_add) {
      max_add = dt - dg;
      wit_add = {u, v};
    }
    if (dg > 0 && static_cast<int64_t>(dt) * mult_den > mult_num * dg) {
      mult_num = dt;
      mult_den = dg;
      wit_mult = {u, v};
    }
  }
};

void require_spanning(const Graph& g, const SubtreeOfGraph& t) {
  if (!is_spanning_tree(g, t))
    throw NotSpanningTreeError("stretch: subtree is not a spanning tree of the graph");
}

}  // namespace

StretchReport additive_stretch(const Graph& g, const SubtreeOfGraph& t,
                               const StretchOptions& opts) {
  require_spanning(g, t);
  int n = g.n();
  StretchScan scan;

  if (!opts.sampled) {
    std::vector<int> gd(n), td(n);
    std::vector<int> queue;
    queue.reserve(n);
    auto run = [&](auto neighbors, int s, std::vector<int>& dist) {
      std::fill(dist.begin(), dist.end(), kUnreachable);
      queue.clear();
      dist[s] = 0;
      queue.push_back(s);
      for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int v : neighbors(u)) {
          if (dist[v] != kUnreachable) continue;
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
      }
    };
    for (int u = 0; u < n; ++u) {
      run([&](int x) { return g.neighbors(x); }, u, gd);
      run([&](int x) { return t.neighbors(x); }, u, td);
      for (int v = u + 1; v < n; ++v) scan.feed(u, v, gd[v], td[v]);
    }
  } else {
    std::mt19937_64 rng(opts.seed);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(opts.sample_count);
    for (int64_t i = 0; i < opts.sample_count; ++i) {
      int u = static_cast<int>(rng() % n);
      int v = static_cast<int>(rng() % n);
      if (u == v) v = (v + 1) % n;
      if (n == 1) break;
      pairs.emplace_back(u, v);
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<int> gd, td;
    int cur = kNoVertex;
    for (auto [u, v] : pairs) {
      if (u != cur) {
        cur = u;
        gd = bfs(g, u).dist;
        td = t.distances_from(u);
      }
      scan.feed(u, v, gd[v], td[v]);
    }
  }

  StretchReport r;
  r.max_additive = scan.max_add;
  int64_t q = gcd64(scan.mult_num, scan.mult_den);
  r.max_multiplicative = {scan.mult_num / q, scan.mult_den / q};
  r.witness_add = scan.wit_add;
  r.witness_mult = scan.wit_mult;
  r.pairs_checked = scan.pairs;
  r.mode = opts.sampled ? "sampled" : "exact";
  r.seed = opts.seed;
  r.bound_checked = opts.bound;
  r.bound_holds = !opts.bound || scan.max_add <= *opts.bound;
  return r;
}

Rational multiplicative_stretch(const Graph& g, const SubtreeOfGraph& t) {
  return additive_stretch(g, t).max_multiplicative;
}

bool is_spanning_tree(const Graph& g, const SubtreeOfGraph& t) {
  return t.host_n() == g.n() && t.spanning();
}

bool is_spanning_tree(const Graph& g, const std::vector<Edge>& edges) {
  int n = g.n();
  if (n == 0) return false;
  if (static_cast<int>(edges.size()) != n - 1) return false;
  std::vector<int> dsu(n);
  std::iota(dsu.begin(), dsu.end(), 0);
  auto find = [&](int v) {
    while (dsu[v] != v) {
      dsu[v] = dsu[dsu[v]];
      v = dsu[v];
    }
    return v;
  };
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) return false;
    if (!g.has_edge(u, v)) return false;
    int a = find(u), b = find(v);
    if (a == b) return false;  // cycle
    dsu[a] = b;
  }
  return true;  // n-1 acyclic edges on n vertices connect everything
}

namespace {

struct Enumerator {
  const Graph& g;
  const DistanceMatrix& gd;
  std::vector<Edge> all_edges;
  uint64_t budget;
  uint64_t count = 0;
  bool exceeded = false;
  int best = -1;
  std::vector<Edge> chosen;
  std::vector<char> excluded;

  Enumerator(const Graph& graph, const DistanceMatrix& dm, uint64_t b)
      : g(graph), gd(dm), all_edges(graph.edges()), budget(b), excluded(graph.m(), 0) {}

  bool remaining_connects() const {
    // Connectivity of chosen + not-yet-excluded edges.
    std::vector<int> dsu(g.n());
    std::iota(dsu.begin(), dsu.end(), 0);
    auto find = [&](int v) {
      while (dsu[v] != v) {
        dsu[v] = dsu[dsu[v]];
        v = dsu[v];
      }
      return v;
    };
    int comps = g.n();
    for (size_t i = 0; i < all_edges.size(); ++i) {
      if (excluded[i]) continue;
      int a = find(all_edges[i].first), b = find(all_edges[i].second);
      if (a != b) {
        dsu[a] = b;
        --comps;
      }
    }
    return comps == 1;
  }

  int tree_stretch() const {
    SubtreeOfGraph t = SubtreeOfGraph::from_edges(g, chosen);
    int max_add = 0;
    for (int u = 0; u < g.n(); ++u) {
      auto td = t.distances_from(u);
      auto row = gd.row(u);
      for (int v = u + 1; v < g.n(); ++v) max_add = std::max(max_add, td[v] - row[v]);
    }
    return max_add;
  }

  // Include/exclude on edge index i; DSU state rebuilt per call (desk scale).
  void rec(size_t i, int picked) {
    if (exceeded) return;
    if (picked == g.n() - 1) {
      if (++count > budget) {
        exceeded = true;
        return;
      }
      int s = tree_stretch();
      if (best < 0 || s < best) best = s;
      return;
    }
    if (i == all_edges.size()) return;
    if (static_cast<int>(all_edges.size() - i) < g.n() - 1 - picked) return;

    // Cycle check for inclusion.
    std::vector<int> dsu(g.n());
    std::iota(dsu.begin(), dsu.end(), 0);
    auto find = [&](int v) {
      while (dsu[v] != v) {
        dsu[v] = dsu[dsu[v]];
        v = dsu[v];
      }
      return v;
    };
    for (auto [u, v] : chosen) dsu[find(u)] = find(v);
    if (find(all_edges[i].first) != find(all_edges[i].second)) {
      chosen.push_back(all_edges[i]);
      rec(i + 1, picked + 1);
      chosen.pop_back();
    }
    excluded[i] = 1;
    if (remaining_connects()) rec(i + 1, picked);
    excluded[i] = 0;
  }
};

}  // namespace

MinStretchResult min_additive_tree_stretch_bruteforce(const Graph& g, uint64_t budget) {
  if (g.n() < 1) throw std::invalid_argument("min stretch oracle: empty graph");
  if (g.n() > 16)
    throw std::invalid_argument("min stretch oracle: instance too large (n = " +
                                std::to_string(g.n()) + ", limit 16)");
  if (!is_connected(g)) throw DisconnectedGraphError("min stretch oracle: disconnected graph");

  DistanceMatrix dm = apsp(g);
  Enumerator e(g, dm, budget);
  e.rec(0, 0);
  MinStretchResult r;
  r.budget = budget;
  r.trees_enumerated = std::min(e.count, budget);
  r.conclusive = !e.exceeded;
  r.min_additive = e.exceeded ? -1 : e.best;
  return r;
}

}  // namespace treespan
