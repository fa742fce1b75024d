#pragma once

#include <functional>
#include <optional>

#include "rainbowkit/coloring.hpp"
#include "rainbowkit/graph.hpp"
#include "rainbowkit/verify.hpp"

namespace rainbow {

/// Knobs for the exhaustive solvers.
struct SolveLimits {
  /// Refuse instances with more edges than this. The environment variable
  /// RAINBOWKIT_MAX_EDGES overrides the built-in default of 24.
  int max_edges = 24;
  /// Abort a branch as soon as some pair's remaining potential paths are
  /// all non-rainbow. Pure optimization; results never change.
  bool prune = true;

  static SolveLimits defaults();
};

/// Optimum value plus a witness coloring achieving it. Every solver
/// certifies the witness with the matching verifier before returning.
struct SolveResult {
  int value = 0;
  EdgeColoring witness;
};

/// rc(G): minimum colors rainbow-connecting every vertex pair. Searches
/// k from diam(G) upward; colorings are enumerated in restricted-growth
/// canonical form (first edge color 0, every later edge at most one past
/// the maximum used), so each coloring-up-to-color-permutation is visited
/// once.
SolveResult rc_exact(const Graph& g, const SolveLimits& lim = SolveLimits::defaults());

/// src(G): as rc_exact with geodesic verification; upper bound m.
SolveResult src_exact(const Graph& g, const SolveLimits& lim = SolveLimits::defaults());

/// Rainbow connection number of a directed graph (pairs satisfied by a
/// rainbow directed path in either direction).
SolveResult rc_directed_exact(const Graph& g,
                              const SolveLimits& lim = SolveLimits::defaults());

/// Minimum k such that a k-coloring satisfies exactly the pairs in p under
/// the mode's verifier. P = {} answers 1: one color is the minimal
/// coloring that exists. Throws when some pair has no connecting path.
SolveResult subset_rc_exact(const Graph& g, const PairSet& p, VerifyMode mode,
                            const SolveLimits& lim = SolveLimits::defaults());

/// Decision form: a witness coloring on yes, std::nullopt on no.
std::optional<EdgeColoring> decide_subset_rc(const Graph& g, const PairSet& p, int k,
                                             VerifyMode mode,
                                             const SolveLimits& lim = SolveLimits::defaults());

/// Maximum number of vertex pairs rainbow-connected by any 2-coloring.
/// The first edge's color is fixed by symmetry, leaving 2^(m-1) canonical
/// colorings; branches that cannot beat the incumbent are cut.
SolveResult maxpairs2_exact(const Graph& g,
                            const SolveLimits& lim = SolveLimits::defaults());

/// Visits every restricted-growth coloring of m edges with at most k
/// colors, in lexicographic order. Test hook for canonicity counting.
void for_each_canonical_coloring(int m, int k,
                                 const std::function<void(const std::vector<int>&)>& fn);

}  // namespace rainbow
