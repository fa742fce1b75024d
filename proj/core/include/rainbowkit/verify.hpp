#pragma once

#include "rainbowkit/coloring.hpp"
#include "rainbowkit/graph.hpp"

namespace rainbow {

/// Rainbow-path semantics used by verifiers and solvers.
///   plain    - any path with pairwise-distinct edge colors
///   geodesic - a shortest path with pairwise-distinct edge colors
///   directed - a directed path in either direction, distinct colors
enum class VerifyMode { plain, geodesic, directed };

/// Hard cap on color counts the subset-state verifier accepts. A color
/// subset must fit in a machine word; desk-scale instances stay far below.
inline constexpr int kColorCap = 24;

/// Does some path from u to v (directed: in either direction) use
/// pairwise-distinct colors? Reachability over (vertex, used-color-set)
/// states: an edge is traversable only when its color is not yet in the
/// set. Rejects u == v and colorings with k > kColorCap.
bool rainbow_path_exists(const Graph& g, const EdgeColoring& c, int u, int v);

/// Is some shortest u-v path rainbow? Same state search restricted to
/// the shortest-path DAG between the endpoints. Undirected only.
bool geodesic_rainbow_exists(const Graph& g, const EdgeColoring& c, int u, int v);

struct VerifyReport {
  PairSet satisfied;
  PairSet unsatisfied;
  int count_satisfied = 0;
};

/// Per-pair application of the mode's existence check. Pairs with no
/// connecting path are reported unsatisfied, never as errors.
VerifyReport verify_pairs(const Graph& g, const EdgeColoring& c, const PairSet& p,
                          VerifyMode mode);

}  // namespace rainbow
