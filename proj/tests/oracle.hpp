#pragma once

#include <cstdint>
#include <vector>

#include "flipkit/map.hpp"

// Reference enumerators, deliberately independent of the library's search
// module. Counts produced here anchor the expectations in the search and
// acceptance tests.
namespace fkoracle {

// Isomorphism classes of simplicial triangulations with exactly v vertices,
// by closing facet lists over open edges.
std::vector<flipkit::TriangulationMap> simplicial_classes(
    flipkit::SurfaceClass surface, std::uint32_t v);

// Isomorphism classes of all triangulations (loops and multiple edges
// included) with the given face count, by exhaustive gluing of face
// hexagons. Only feasible for very small face counts.
std::vector<flipkit::TriangulationMap> glued_classes(
    flipkit::SurfaceClass surface, std::uint32_t faces);

}  // namespace fkoracle
