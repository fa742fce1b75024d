#include "rainbowkit/coloring.hpp"

#include <stdexcept>
#include <string>

namespace rainbow {

EdgeColoring::EdgeColoring(const Graph& g, std::vector<int> colors, int k) {
  if (k < 1) throw std::invalid_argument("color count must be at least 1");
  if (static_cast<int>(colors.size()) != g.edge_count())
    throw std::invalid_argument("coloring must assign every edge exactly one color");
  for (int c : colors)
    if (c < 0 || c >= k)
      throw std::invalid_argument("color index out of range: " + std::to_string(c));
  shape_ = g;
  colors_ = std::move(colors);
  k_ = k;
}

int EdgeColoring::color_of(int u, int v) const {
  int idx = shape_.edge_index(u, v);
  if (idx < 0)
    throw std::invalid_argument("no such edge: (" + std::to_string(u) + "," +
                                std::to_string(v) + ")");
  return colors_[idx];
}

}  // namespace rainbow
