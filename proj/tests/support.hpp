#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "flipkit/map.hpp"

namespace fktest {

using flipkit::TriangulationMap;

inline TriangulationMap tetrahedron() {
  return TriangulationMap::from_face_triples(
      {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline TriangulationMap octahedron() {
  return TriangulationMap::from_face_triples({{0, 1, 2},
                                              {0, 2, 3},
                                              {0, 3, 4},
                                              {0, 4, 1},
                                              {5, 1, 2},
                                              {5, 2, 3},
                                              {5, 3, 4},
                                              {5, 4, 1}});
}

// K7 on the torus: faces {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline TriangulationMap k7_torus() {
  std::vector<std::array<std::uint32_t, 3>> faces;
  for (std::uint32_t i = 0; i < 7; ++i) {
    faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
    faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return TriangulationMap::from_face_triples(faces);
}

// K6 embedded in the projective plane.
inline TriangulationMap rp2_k6() {
  return TriangulationMap::from_face_triples({{1, 2, 5},
                                              {1, 2, 6},
                                              {1, 3, 4},
                                              {1, 3, 6},
                                              {1, 4, 5},
                                              {2, 3, 4},
                                              {2, 3, 5},
                                              {2, 4, 6},
                                              {3, 5, 6},
                                              {4, 5, 6}});
}

// Two triangles glued along their whole boundary: a sphere that is a valid
// map but not a regular triangulation (too few faces).
inline TriangulationMap pillow() {
  return TriangulationMap::from_map_arrays(
      {1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10},
      {5, 2, 1, 4, 3, 0, 11, 8, 7, 10, 9, 6},
      {6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5});
}

}  // namespace fktest
