#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbowkit/coloring.hpp"
#include "rainbowkit/graph.hpp"
#include "rainbowkit/solver.hpp"

namespace rainbow {

/// What the kernelization cascade saw: the vertex it worked from, its
/// non-neighbors, the components of the complement of G[N(v)], and the
/// clique when the clique stage fired.
struct KernelTrace {
  int chosen_v = -1;
  std::vector<int> o_v;
  std::vector<std::vector<int>> h_components;
  int isolated_count = 0;
  std::optional<std::vector<int>> clique;
};

enum class KernelOutcome { yes, no, kernel };

/// Three-way outcome of the kernelization for "at least |E| + k pairs
/// rainbow-connected with 2 colors": a verified Yes certificate, a No
/// (fewer than k anti-edges), or the instance itself as a kernel with at
/// most 4k vertices.
struct KernelResult {
  KernelOutcome outcome = KernelOutcome::kernel;
  std::optional<EdgeColoring> witness;
  int certified_count = 0;
  std::string reason;
  std::optional<Graph> kernel;
  int k = 0;
  KernelTrace trace;
};

/// 2-coloring from a BFS tree rooted at v: edges between consecutive
/// layers alternate red/blue, so every vertex at depth >= 2 reaches its
/// grandparent layer on a bicolored path. Rainbow-connects at least
/// |O_v| = |non-neighbors of v| anti-edge pairs (checked on return).
EdgeColoring bfs_layer_coloring(const Graph& g, int v);

/// Which branch clique_coloring took, for test coverage.
struct CliqueColoringInfo {
  int case_id = 0;  // 1: L2 nonempty, 2: enough M-L1 anti-edges, 3: greedy loop
  int loop_iterations = 0;
  bool recolored = false;
};

/// 2-coloring that rainbow-connects at least |E| + k pairs given a clique
/// M with |M| >= k and at least k anti-edges overall. Distance-1/2 layers
/// from M pick between three colorings; the last runs a greedy marking
/// loop over anti-edges inside L1 and possibly recolors part of the
/// clique. The count is verified before returning.
EdgeColoring clique_coloring(const Graph& g, const std::vector<int>& clique, int k,
                             CliqueColoringInfo* info = nullptr);

/// 2-coloring of the spokes at v from an alternating vertex coloring of
/// each nontrivial component of the complement of G[N(v)]: every component
/// spanning-tree edge yields an anti-edge pair rainbow-connected through
/// v. Connects at least sum |C_i| - r pairs (checked on return).
EdgeColoring component_coloring(const Graph& g, int v);

/// Greedily grows `clique` by minimum-index vertices adjacent to all
/// current members; validates the seed.
std::vector<int> greedy_extend_clique(const Graph& g, std::vector<int> clique);

/// The kernelization cascade. Yes outcomes carry the constructive
/// coloring that proves them; No fires only when the graph has fewer than
/// k anti-edges; otherwise the instance itself is returned as a kernel,
/// which the cascade's counting has bounded by 4k vertices.
KernelResult kernelize(const Graph& g, int k);

struct MaxPairsDecision {
  bool yes = false;
  std::optional<EdgeColoring> witness;
  KernelResult kernel_result;
};

/// Full decision procedure: kernelize, then brute-force the kernel with
/// maxpairs2_exact and compare against |E| + k.
MaxPairsDecision decide_maxpairs2(const Graph& g, int k,
                                  const SolveLimits& lim = SolveLimits::defaults());

}  // namespace rainbow
