#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flipkit/errors.hpp"

namespace flipkit {

// A flag of a combinatorial map. Orbit handles are the minimal flag index of
// the orbit; they are only meaningful for one fixed map instance.
using Flag = std::uint32_t;
inline constexpr Flag kNoFlag = 0xffffffffu;

struct SurfaceClass {
  int euler_characteristic = 2;
  bool orientable = true;
  bool operator==(const SurfaceClass&) const = default;
};

// Human-readable name ("sphere", "torus", ...; generic fallback otherwise).
std::string surface_name(const SurfaceClass& sc);
// Inverse of surface_name for the named table entries.
std::optional<SurfaceClass> surface_by_name(const std::string& name);

struct Counts {
  std::uint32_t v = 0, e = 0, f = 0;
  bool operator==(const Counts&) const = default;
};

// Triangulation of a closed surface as a flag system: three fixed-point-free
// involutions s0, s1, s2 on the flag set, where s_i changes the i-dimensional
// incidence. Vertices are <s1,s2>-orbits, edges <s0,s2>-orbits (size 4),
// faces <s0,s1>-orbits (size 6). Loops and multiple edges are representable.
// Instances are immutable; all mutating operations build fresh maps.
class TriangulationMap {
 public:
  // Validates all axioms; raises Error on violation.
  static TriangulationMap from_map_arrays(const std::vector<Flag>& s0,
                                          const std::vector<Flag>& s1,
                                          const std::vector<Flag>& s2);
  // Loader for simplicial facet lists. The result is regular or an Error.
  static TriangulationMap from_face_triples(
      const std::vector<std::array<std::uint32_t, 3>>& faces);

  std::uint32_t flag_count() const { return n_; }
  Flag s(unsigned i, Flag x) const { return s_[i][x]; }
  const std::vector<Flag>& involution(unsigned i) const { return s_[i]; }

  // Orbit handle (minimal flag) of the orbit of x. kind: 0 = vertex,
  // 1 = edge, 2 = face (the kind index is the dimension the orbit misses).
  Flag orbit_of(unsigned kind, Flag x) const { return orbit_[kind][x]; }
  Flag vertex_of(Flag x) const { return orbit_[0][x]; }
  Flag edge_of(Flag x) const { return orbit_[1][x]; }
  Flag face_of(Flag x) const { return orbit_[2][x]; }

  // Sorted lists of orbit handles.
  const std::vector<Flag>& vertices() const { return reps_[0]; }
  const std::vector<Flag>& edges() const { return reps_[1]; }
  const std::vector<Flag>& faces() const { return reps_[2]; }

  Counts counts() const;
  SurfaceClass surface_class() const;

  // No loops, no multiple edges, more than three faces.
  bool is_regular() const;

  // Number of edge-ends at the vertex (loops count twice).
  std::uint32_t vertex_degree(Flag v) const;

  struct LinkStep {
    Flag vertex;  // neighbour vertex handle
    Flag edge;    // edge handle crossed to reach it
  };
  // Cyclic boundary walk of a regular neighbourhood of v.
  std::vector<LinkStep> link_of_vertex(Flag v) const;

  // The three corner vertex handles / endpoint handles.
  std::array<Flag, 3> face_corners(Flag f) const;
  std::array<Flag, 2> edge_endpoints(Flag e) const;

  // Facet list with vertices renumbered 0..v-1 in handle order.
  // Requires is_regular (Error NotRegular otherwise).
  std::vector<std::array<std::uint32_t, 3>> to_face_triples() const;

  // Labelled equality (same arrays), mostly for tests.
  bool same_arrays(const TriangulationMap& o) const;

 private:
  TriangulationMap() = default;
  void build_orbits();  // fills orbit_/reps_/chi_/orientable_
  friend TriangulationMap make_map_unchecked(std::vector<Flag> s0,
                                             std::vector<Flag> s1,
                                             std::vector<Flag> s2);

  std::uint32_t n_ = 0;
  std::array<std::vector<Flag>, 3> s_;
  std::array<std::vector<Flag>, 3> orbit_;
  std::array<std::vector<Flag>, 3> reps_;
  int chi_ = 0;
  bool orientable_ = true;
};

// Assembles a map from ready involutions, skipping triangulation checks.
// Internal building block for the move implementations.
TriangulationMap make_map_unchecked(std::vector<Flag> s0, std::vector<Flag> s1,
                                    std::vector<Flag> s2);

}  // namespace flipkit
