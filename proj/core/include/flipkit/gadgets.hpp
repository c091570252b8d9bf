#pragma once

#include <cstdint>

#include "flipkit/map.hpp"
#include "flipkit/moves.hpp"

namespace flipkit {

// Constructive flip sequences. Every script is checked by verify_script
// against its declared start before being returned.

// All-regular flips moving the subdivision vertex from face d to face d2:
// script from face_subdivide(T, d) to a map isomorphic to
// face_subdivide(T, d2); two flips per dual-graph step.
// Requires is_regular(T).
MoveScript subdivision_transfer(const TriangulationMap& T, Flag d, Flag d2);

// Script on barycentric(T) ending at a map isomorphic to
// barycentric(flip(T, e)); no move creates a loop; all moves flip edges whose
// flags derive from the two faces at e. Realized by a fixed eight-flip patch
// sequence, with a bounded state search as fallback.
MoveScript lift_flip_to_bary(const TriangulationMap& T, Flag e);

// All-regular script on barycentric(barycentric(T)) ending isomorphic to the
// double subdivision of flip(T, e): each move of lift_flip_to_bary is itself
// lifted one level.
MoveScript lift_flip_to_bary2(const TriangulationMap& T, Flag e);

// Script from regular T to a map isomorphic to barycentric(barycentric(T))
// containing exactly 35*(v - chi) FaceSubdivide moves and otherwise only
// regular flips (two stages; each stage realizes one barycentric subdivision
// with e+f subdivisions: face centres first, then one midpoint flip per edge).
MoveScript bary_by_subdivisions(const TriangulationMap& T);

}  // namespace flipkit
