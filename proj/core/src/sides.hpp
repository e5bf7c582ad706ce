#pragma once

#include <array>
#include <vector>

#include "faceq/complex.hpp"

namespace faceq::detail {

// Flag ids of the two face sides carrying each edge, in flag-id order.
// Assumes the side-count invariant already holds.
inline std::vector<std::array<int, 2>> sides_per_edge(const BoundaryComplex& c,
                                                      const FlagIndexer& fi) {
  std::vector<std::array<int, 2>> sides(c.edges.size(), {-1, -1});
  for (std::size_t f = 0; f < c.faces.size(); ++f) {
    for (std::size_t i = 0; i < c.faces[f].size(); ++i) {
      int e = sym_index(c.faces[f][i]);
      int id = fi.id(static_cast<int>(f), static_cast<int>(i));
      if (sides[e][0] == -1) sides[e][0] = id;
      else sides[e][1] = id;
    }
  }
  return sides;
}

}  // namespace faceq::detail
