#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "flipkit/map.hpp"

namespace flipkit {

// Minimal built-in seeds (12 flags except the genus-2 one).
TriangulationMap seed_sphere3();   // doubled triangle, v=3
TriangulationMap seed_torus1();    // one-vertex torus, v=1
TriangulationMap seed_klein1();    // one-vertex Klein bottle, v=1
TriangulationMap seed_rp2_2();     // projective plane, v=2
TriangulationMap seed_genus2_1();  // one-vertex genus-2 surface, v=1

// Fan-triangulated polygon with sides glued in pairs.
// pairing[i] = {j, head_to_tail}: side i glues to side j; head_to_tail means
// opposite boundary orientation (the "a ... a^-1" pattern), otherwise the
// sides are identified parallelly ("a ... a").
TriangulationMap from_polygon_scheme(
    const std::vector<std::pair<std::uint32_t, bool>>& pairing);

// Seed from the built-in table (or FLIPKIT_SEED_DIR override) followed by
// face subdivisions up to v vertices. Error NoSeedAvailable when the surface
// is not in the table or v is below the table minimum.
TriangulationMap standard_seed(const SurfaceClass& surface, std::uint32_t v);

// Smallest v standard_seed supports for this surface (nullopt if untabled).
std::optional<std::uint32_t> seed_min_vertices(const SurfaceClass& surface);

}  // namespace flipkit
