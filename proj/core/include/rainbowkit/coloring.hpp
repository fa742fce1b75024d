#pragma once

#include <vector>

#include "rainbowkit/graph.hpp"

namespace rainbow {

/// Total edge coloring of a specific graph shape. Every edge carries one
/// color index in [0, k); k is the declared color count and may exceed
/// the number of colors actually used.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  EdgeColoring(const Graph& g, std::vector<int> colors, int k);

  int k() const { return k_; }
  const std::vector<int>& colors() const { return colors_; }
  int color_at(int edge_index) const { return colors_.at(edge_index); }
  /// Color of the edge (u,v); throws when (u,v) is not an edge.
  int color_of(int u, int v) const;

  const Graph& shape() const { return shape_; }
  bool matches(const Graph& g) const { return shape_.same_shape(g); }

 private:
  Graph shape_;
  std::vector<int> colors_;
  int k_ = 1;
};

}  // namespace rainbow
