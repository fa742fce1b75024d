#pragma once

#include <memory>
#include <utility>
#include <vector>

namespace rainbow {

/// A vertex pair. Canonically ordered (first < second) in undirected
/// contexts; ordered in directed ones.
using Edge = std::pair<int, int>;

/// Simple graph over dense integer vertices 0..n-1.
///
/// Undirected edges are stored canonically as (min, max); directed edges
/// keep their orientation. Construction rejects self-loops, duplicate
/// edges and out-of-range endpoints. Instances are immutable once built
/// and cheap to copy (the edge list is shared).
class Graph {
 public:
  Graph() = default;

  static Graph undirected(int n, std::vector<Edge> edges);
  static Graph directed(int n, std::vector<Edge> arcs);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_->size()); }
  bool is_directed() const { return directed_; }
  const std::vector<Edge>& edges() const { return *edges_; }
  Edge edge(int index) const { return (*edges_)[index]; }

  /// True if (u,v) is an edge; undirected graphs accept either order.
  bool has_edge(int u, int v) const;
  /// Index of (u,v) in edges(), or -1 when absent.
  int edge_index(int u, int v) const;

  int degree(int v) const;
  const std::vector<int>& neighbors(int v) const;      // undirected only
  const std::vector<int>& out_neighbors(int v) const;  // directed only
  const std::vector<int>& in_neighbors(int v) const;   // directed only

  /// Same vertex count, orientation and edge list.
  bool same_shape(const Graph& other) const;

  std::shared_ptr<const std::vector<Edge>> edge_list_handle() const {
    return edges_;
  }

 private:
  Graph(int n, bool directed, std::vector<Edge> edges);
  void check_vertex(int v) const;

  int n_ = 0;
  bool directed_ = false;
  std::shared_ptr<const std::vector<Edge>> edges_ =
      std::make_shared<const std::vector<Edge>>();
  std::vector<std::vector<int>> adj_;   // undirected: neighbors; directed: out
  std::vector<std::vector<int>> radj_;  // directed: in
};

/// Set of unordered vertex pairs (no (v,v), no duplicates). Pairs are
/// unordered for directed instances too: a pair is satisfied by a rainbow
/// path in either direction.
class PairSet {
 public:
  PairSet() = default;
  explicit PairSet(std::vector<Edge> pairs);
  static PairSet all_pairs(int n);

  const std::vector<Edge>& pairs() const { return pairs_; }
  int size() const { return static_cast<int>(pairs_.size()); }
  bool empty() const { return pairs_.empty(); }
  bool contains(int u, int v) const;
  /// Largest vertex id mentioned, or -1 when empty.
  int max_vertex() const;

 private:
  std::vector<Edge> pairs_;  // sorted, each (a,b) with a < b
};

/// BFS distances from `source` (-1 when unreachable). Directed graphs
/// follow arc orientation; `reverse` walks arcs backwards instead.
std::vector<int> bfs_distances(const Graph& g, int source, bool reverse = false);

/// Undirected: exactly one connected component. Directed: between every
/// two vertices there is a directed path in at least one direction.
bool connectivity_check(const Graph& g);

/// All non-adjacent distinct vertex pairs of an undirected graph.
PairSet anti_edges(const Graph& g);

/// BFS layers of a connected undirected graph: layer 0 is {root},
/// layer i holds the vertices at distance i. Layers partition V.
std::vector<std::vector<int>> bfs_layers(const Graph& g, int root);

/// Complement of an undirected graph.
Graph complement(const Graph& g);

}  // namespace rainbow
