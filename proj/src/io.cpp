#include "treespan/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "treespan/errors.hpp"

namespace treespan {

namespace {

bool is_count(const std::string& tok) {
  if (tok.empty()) return false;
  return std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

long parse_count(const std::string& tok, const std::string& what) {
  if (!is_count(tok)) throw ParseError("expected " + what + ", got '" + tok + "'");
  return std::stol(tok);
}

GraphFile read_pace_graph(std::istream& in) {
  std::string line;
  long n = -1, m = -1;
  std::vector<Edge> edges;
  long edge_lines = 0;
  while (std::getline(in, line)) {
    auto toks = tokenize(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "p") {
      if (n >= 0) throw ParseError("duplicate p line");
      size_t at = 1;
      if (at < toks.size() && !is_count(toks[at])) ++at;  // optional descriptor, e.g. "tw"
      if (at + 1 >= toks.size()) throw ParseError("p line needs <n> <m>");
      n = parse_count(toks[at], "vertex count");
      m = parse_count(toks[at + 1], "edge count");
      continue;
    }
    if (n < 0) throw ParseError("edge line before p line");
    if (toks.size() != 2) throw ParseError("edge line needs two endpoints: '" + line + "'");
    long u = parse_count(toks[0], "vertex"), v = parse_count(toks[1], "vertex");
    if (u < 1 || v < 1 || u > n || v > n)
      throw ParseError("vertex out of range 1.." + std::to_string(n) + " in line '" + line + "'");
    if (u == v) throw ParseError("self-loop in line '" + line + "'");
    ++edge_lines;
    edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
  }
  if (n < 0) throw ParseError("missing p line");
  if (edge_lines != m)
    throw ParseError("header declares " + std::to_string(m) + " edges, file has " +
                     std::to_string(edge_lines));
  GraphFile gf;
  gf.graph = Graph(static_cast<int>(n), edges);
  gf.format = GraphFormat::Pace;
  gf.labels.reserve(n);
  for (long v = 1; v <= n; ++v) {
    gf.labels.push_back(std::to_string(v));
    gf.vertex_of[gf.labels.back()] = static_cast<int>(v - 1);
  }
  return gf;
}

GraphFile read_edgelist_graph(std::istream& in) {
  std::vector<std::string> toks;
  std::string line;
  while (std::getline(in, line)) {
    auto line_toks = tokenize(line);
    if (!line_toks.empty() && line_toks[0] == "c") continue;
    toks.insert(toks.end(), line_toks.begin(), line_toks.end());
  }
  if (toks.size() % 2 != 0) throw ParseError("edge list has an odd number of tokens");
  if (toks.empty()) throw ParseError("empty edge list");

  std::vector<std::string> labels(toks.begin(), toks.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  bool numeric = std::all_of(labels.begin(), labels.end(), is_count);
  if (numeric)
    std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });

  GraphFile gf;
  gf.format = GraphFormat::EdgeList;
  gf.labels = labels;
  for (size_t i = 0; i < labels.size(); ++i) gf.vertex_of[labels[i]] = static_cast<int>(i);

  std::vector<Edge> edges;
  for (size_t i = 0; i + 1 < toks.size(); i += 2) {
    int u = gf.vertex_of[toks[i]], v = gf.vertex_of[toks[i + 1]];
    if (u == v) throw ParseError("self-loop on label '" + toks[i] + "'");
    edges.emplace_back(u, v);
  }
  gf.graph = Graph(static_cast<int>(labels.size()), edges);
  return gf;
}

}  // namespace

int GraphFile::parse_vertex(const std::string& token) const {
  auto it = vertex_of.find(token);
  if (it == vertex_of.end()) throw ParseError("unknown vertex label '" + token + "'");
  return it->second;
}

GraphFile read_graph(std::istream& in, std::optional<GraphFormat> format) {
  if (format) return *format == GraphFormat::Pace ? read_pace_graph(in) : read_edgelist_graph(in);
  // Auto-detect: a PACE file opens with a p line (comments aside).
  std::stringstream buffered;
  buffered << in.rdbuf();
  std::string line;
  bool pace = false;
  {
    std::istringstream probe(buffered.str());
    while (std::getline(probe, line)) {
      auto toks = tokenize(line);
      if (toks.empty() || toks[0] == "c") continue;
      pace = toks[0] == "p";
      break;
    }
  }
  std::istringstream replay(buffered.str());
  return pace ? read_pace_graph(replay) : read_edgelist_graph(replay);
}

GraphFile read_graph_file(const std::string& path, std::optional<GraphFormat> format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  return read_graph(in, format);
}

void write_graph_pace(std::ostream& out, const Graph& g) {
  out << "p " << g.n() << " " << g.m() << "\n";
  for (auto [u, v] : g.edges()) out << u + 1 << " " << v + 1 << "\n";
}

void write_graph_edgelist(std::ostream& out, const Graph& g,
                          const std::vector<std::string>* labels) {
  for (auto [u, v] : g.edges()) {
    if (labels)
      out << (*labels)[u] << " " << (*labels)[v] << "\n";
    else
      out << u << " " << v << "\n";
  }
}

std::vector<Edge> read_tree_edges(std::istream& in, const GraphFile& context) {
  std::vector<std::string> toks;
  std::string line;
  while (std::getline(in, line)) {
    auto line_toks = tokenize(line);
    if (!line_toks.empty() && line_toks[0] == "c") continue;
    toks.insert(toks.end(), line_toks.begin(), line_toks.end());
  }
  if (toks.size() % 2 != 0) throw ParseError("tree edge list has an odd number of tokens");
  std::vector<Edge> edges;
  for (size_t i = 0; i + 1 < toks.size(); i += 2)
    edges.emplace_back(context.parse_vertex(toks[i]), context.parse_vertex(toks[i + 1]));
  return edges;
}

std::vector<Edge> read_tree_edges_file(const std::string& path, const GraphFile& context) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open tree file '" + path + "'");
  return read_tree_edges(in, context);
}

void write_tree_edgelist(std::ostream& out, const std::vector<Edge>& edges,
                         const GraphFile& context) {
  for (auto [u, v] : edges) out << context.label(u) << " " << context.label(v) << "\n";
}

TreeDecomposition read_td(std::istream& in) {
  std::string line;
  long bag_count = -1, g_n = -1;
  std::vector<std::vector<int>> bags;
  std::vector<char> bag_seen;
  std::vector<Edge> host_edges;
  while (std::getline(in, line)) {
    auto toks = tokenize(line);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "s") {
      if (bag_count >= 0) throw ParseError("duplicate s line");
      if (toks.size() < 5 || toks[1] != "td") throw ParseError("expected 's td <bags> <max-bag-size> <n>'");
      bag_count = parse_count(toks[2], "bag count");
      parse_count(toks[3], "max bag size");
      g_n = parse_count(toks[4], "graph order");
      if (bag_count < 1) throw ParseError("decomposition needs at least one bag");
      bags.assign(bag_count, {});
      bag_seen.assign(bag_count, 0);
      continue;
    }
    if (bag_count < 0) throw ParseError("content before s line");
    if (toks[0] == "b") {
      if (toks.size() < 2) throw ParseError("b line needs a bag id");
      long id = parse_count(toks[1], "bag id");
      if (id < 1 || id > bag_count) throw ParseError("bag id " + toks[1] + " out of range");
      if (bag_seen[id - 1]) throw ParseError("duplicate bag " + toks[1]);
      bag_seen[id - 1] = 1;
      for (size_t i = 2; i < toks.size(); ++i) {
        long v = parse_count(toks[i], "vertex");
        if (v < 1 || v > g_n) throw ParseError("vertex " + toks[i] + " out of range 1.." +
                                               std::to_string(g_n));
        bags[id - 1].push_back(static_cast<int>(v - 1));
      }
      continue;
    }
    if (toks.size() != 2) throw ParseError("host edge line needs two node ids: '" + line + "'");
    long a = parse_count(toks[0], "host node"), b = parse_count(toks[1], "host node");
    if (a < 1 || b < 1 || a > bag_count || b > bag_count)
      throw ParseError("host node out of range in line '" + line + "'");
    if (a == b) throw ParseError("host self-loop in line '" + line + "'");
    host_edges.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  }
  if (bag_count < 0) throw ParseError("missing s line");

  // Contract attached empty-bag nodes away; reject a decomposition that is
  // only an empty bag.
  std::vector<std::set<int>> adj(bag_count);
  for (auto [a, b] : host_edges) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<char> alive(bag_count, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int t = 0; t < bag_count; ++t) {
      if (!alive[t] || !bags[t].empty() || adj[t].empty()) continue;
      int keep = *adj[t].begin();
      for (int x : adj[t]) {
        if (x == keep) continue;
        adj[x].erase(t);
        adj[x].insert(keep);
        adj[keep].insert(x);
      }
      adj[keep].erase(t);
      adj[t].clear();
      alive[t] = 0;
      changed = true;
    }
  }
  std::vector<int> id(bag_count, kNoVertex);
  std::vector<std::vector<int>> kept_bags;
  int next = 0;
  for (int t = 0; t < bag_count; ++t)
    if (alive[t]) {
      if (bags[t].empty() && g_n > 0)
        throw ParseError("bag " + std::to_string(t + 1) + " is empty and cannot be contracted");
      id[t] = next++;
      kept_bags.push_back(std::move(bags[t]));
    }
  std::vector<Edge> kept_edges;
  for (int t = 0; t < bag_count; ++t)
    if (alive[t])
      for (int x : adj[t])
        if (t < x) kept_edges.emplace_back(id[t], id[x]);
  return TreeDecomposition(Graph(next, kept_edges), std::move(kept_bags), static_cast<int>(g_n));
}

TreeDecomposition read_td_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open decomposition file '" + path + "'");
  return read_td(in);
}

void write_td(std::ostream& out, const TreeDecomposition& td) {
  size_t max_bag = 0;
  for (const auto& b : td.bags()) max_bag = std::max(max_bag, b.size());
  out << "s td " << td.bags().size() << " " << max_bag << " " << td.g_n() << "\n";
  for (size_t t = 0; t < td.bags().size(); ++t) {
    out << "b " << t + 1;
    for (int v : td.bag(static_cast<int>(t))) out << " " << v + 1;
    out << "\n";
  }
  for (auto [a, b] : td.host().edges()) out << a + 1 << " " << b + 1 << "\n";
}

std::string tree_to_dot(const std::vector<Edge>& edges, const GraphFile& context) {
  std::ostringstream out;
  out << "graph tree {\n";
  for (auto [u, v] : edges)
    out << "  \"" << context.label(u) << "\" -- \"" << context.label(v) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace treespan
