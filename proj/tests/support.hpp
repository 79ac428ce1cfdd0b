#pragma once

#include <random>
#include <vector>

#include "newtonjump/diagram.hpp"

namespace newtonjump::testing {

/// Convenient diagram spanned by a few random points in [0,side]^2 plus one
/// point on each axis.
inline Diagram random_convenient_diagram(std::mt19937_64& rng, integer side) {
  std::uniform_int_distribution<integer> coord(0, side);
  std::uniform_int_distribution<integer> axis(1, side);
  std::uniform_int_distribution<int> count(0, 6);
  std::vector<LatticePoint> pts{{0, axis(rng)}, {axis(rng), 0}};
  for (int i = count(rng); i > 0; --i) pts.push_back({coord(rng), coord(rng)});
  return diagram_from_vertices(pts);
}

inline std::vector<LatticePoint> random_points(std::mt19937_64& rng, integer side, int max_count) {
  std::uniform_int_distribution<integer> coord(0, side);
  std::uniform_int_distribution<int> count(0, max_count);
  std::vector<LatticePoint> pts;
  for (int i = count(rng); i > 0; --i) pts.push_back({coord(rng), coord(rng)});
  return pts;
}

}  // namespace newtonjump::testing
