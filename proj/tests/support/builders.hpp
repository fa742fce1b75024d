#pragma once

#include <vector>

#include "rainbowkit/graph.hpp"

namespace rainbow::testing {

inline Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::undirected(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::undirected(n, std::move(edges));
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::undirected(n, std::move(edges));
}

// Leaves 0..leaves-1, center = leaves.
inline Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int v = 0; v < leaves; ++v) edges.push_back({v, leaves});
  return Graph::undirected(leaves + 1, std::move(edges));
}

// 0 -> 1 -> ... -> n-1 plus the chord 0 -> n-1.
inline Graph directed_chain_with_chord(int n) {
  std::vector<Edge> arcs;
  for (int i = 0; i + 1 < n; ++i) arcs.push_back({i, i + 1});
  arcs.push_back({0, n - 1});
  return Graph::directed(n, std::move(arcs));
}

inline Graph directed_cycle(int n) {
  std::vector<Edge> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return Graph::directed(n, std::move(arcs));
}

}  // namespace rainbow::testing
