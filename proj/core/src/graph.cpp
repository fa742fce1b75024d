#include "rainbowkit/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace rainbow {

namespace {

std::string edge_str(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace

Graph::Graph(int n, bool directed, std::vector<Edge> edges) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  n_ = n;
  directed_ = directed;
  for (auto& e : edges) {
    if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n)
      throw std::invalid_argument("edge endpoint out of range: " + edge_str(e));
    if (e.first == e.second)
      throw std::invalid_argument("self-loop rejected: " + edge_str(e));
    if (!directed && e.first > e.second) std::swap(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i] == edges[i - 1])
      throw std::invalid_argument("duplicate edge rejected: " + edge_str(edges[i]));

  adj_.assign(n, {});
  if (directed) radj_.assign(n, {});
  for (const auto& e : edges) {
    adj_[e.first].push_back(e.second);
    if (directed)
      radj_[e.second].push_back(e.first);
    else
      adj_[e.second].push_back(e.first);
  }
  for (auto& v : adj_) std::sort(v.begin(), v.end());
  for (auto& v : radj_) std::sort(v.begin(), v.end());
  edges_ = std::make_shared<const std::vector<Edge>>(std::move(edges));
}

Graph Graph::undirected(int n, std::vector<Edge> edges) {
  return Graph(n, false, std::move(edges));
}

Graph Graph::directed(int n, std::vector<Edge> arcs) {
  return Graph(n, true, std::move(arcs));
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw std::invalid_argument("vertex out of range: " + std::to_string(v));
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  Edge e{u, v};
  if (!directed_ && e.first > e.second) std::swap(e.first, e.second);
  auto it = std::lower_bound(edges_->begin(), edges_->end(), e);
  if (it != edges_->end() && *it == e)
    return static_cast<int>(it - edges_->begin());
  return -1;
}

int Graph::degree(int v) const {
  check_vertex(v);
  if (directed_)
    return static_cast<int>(adj_[v].size() + radj_[v].size());
  return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (directed_) throw std::logic_error("neighbors() requires an undirected graph");
  check_vertex(v);
  return adj_[v];
}

const std::vector<int>& Graph::out_neighbors(int v) const {
  if (!directed_) throw std::logic_error("out_neighbors() requires a directed graph");
  check_vertex(v);
  return adj_[v];
}

const std::vector<int>& Graph::in_neighbors(int v) const {
  if (!directed_) throw std::logic_error("in_neighbors() requires a directed graph");
  check_vertex(v);
  return radj_[v];
}

bool Graph::same_shape(const Graph& other) const {
  if (n_ != other.n_ || directed_ != other.directed_) return false;
  return edges_ == other.edges_ || *edges_ == *other.edges_;
}

PairSet::PairSet(std::vector<Edge> pairs) {
  for (auto& p : pairs) {
    if (p.first == p.second)
      throw std::invalid_argument("pair (v,v) rejected: " + edge_str(p));
    if (p.first < 0 || p.second < 0)
      throw std::invalid_argument("negative vertex in pair: " + edge_str(p));
    if (p.first > p.second) std::swap(p.first, p.second);
  }
  std::sort(pairs.begin(), pairs.end());
  for (size_t i = 1; i < pairs.size(); ++i)
    if (pairs[i] == pairs[i - 1])
      throw std::invalid_argument("duplicate pair rejected: " + edge_str(pairs[i]));
  pairs_ = std::move(pairs);
}

PairSet PairSet::all_pairs(int n) {
  std::vector<Edge> ps;
  ps.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) ps.push_back({u, v});
  return PairSet(std::move(ps));
}

bool PairSet::contains(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(pairs_.begin(), pairs_.end(), Edge{u, v});
}

int PairSet::max_vertex() const {
  int mx = -1;
  for (const auto& p : pairs_) mx = std::max(mx, p.second);
  return mx;
}

std::vector<int> bfs_distances(const Graph& g, int source, bool reverse) {
  if (source < 0 || source >= g.vertex_count())
    throw std::invalid_argument("BFS source out of range: " + std::to_string(source));
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    const auto& next = g.is_directed()
                           ? (reverse ? g.in_neighbors(v) : g.out_neighbors(v))
                           : g.neighbors(v);
    for (int w : next) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

bool connectivity_check(const Graph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  if (!g.is_directed()) {
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
  }
  // Directed sense: for every pair, a directed path in at least one
  // direction.
  std::vector<std::vector<int>> dist(n);
  for (int v = 0; v < n; ++v) dist[v] = bfs_distances(g, v);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (dist[u][v] < 0 && dist[v][u] < 0) return false;
  return true;
}

PairSet anti_edges(const Graph& g) {
  if (g.is_directed())
    throw std::invalid_argument("anti_edges() requires an undirected graph");
  std::vector<Edge> ps;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.has_edge(u, v)) ps.push_back({u, v});
  return PairSet(std::move(ps));
}

std::vector<std::vector<int>> bfs_layers(const Graph& g, int root) {
  if (g.is_directed())
    throw std::invalid_argument("bfs_layers() requires an undirected graph");
  auto dist = bfs_distances(g, root);
  int maxd = 0;
  int seen = 0;
  for (int d : dist) {
    if (d < 0) continue;
    ++seen;
    maxd = std::max(maxd, d);
  }
  if (seen != g.vertex_count())
    throw std::invalid_argument("bfs_layers() requires a connected graph");
  std::vector<std::vector<int>> layers(maxd + 1);
  for (int v = 0; v < g.vertex_count(); ++v) layers[dist[v]].push_back(v);
  return layers;
}

Graph complement(const Graph& g) {
  if (g.is_directed())
    throw std::invalid_argument("complement() requires an undirected graph");
  std::vector<Edge> edges;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (!g.has_edge(u, v)) edges.push_back({u, v});
  return Graph::undirected(g.vertex_count(), std::move(edges));
}

}  // namespace rainbow
