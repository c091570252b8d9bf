#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "flipkit/map.hpp"

namespace flipkit {

// Total-order encoding of a map up to isomorphism (including reflection,
// since flags carry no orientation). Layout: [n, then for each canonical
// flag x in order: label(s0 x), label(s1 x), label(s2 x)].
// Produced by BFS relabelling from every start flag, keeping the
// lexicographic minimum.
struct CanonicalKey {
  std::vector<std::uint32_t> w;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct KeyHash {
  std::size_t operator()(const CanonicalKey& k) const;
};

std::string key_to_hex(const CanonicalKey& k);
CanonicalKey key_from_hex(const std::string& hex);  // Error BadFormat

// Canonical form: the key plus the winning relabelling and the orbit handles
// listed in canonical traversal order. The rank of an orbit in that order is
// the portable address used by move scripts.
struct CanonicalForm {
  CanonicalKey key;
  std::vector<Flag> to_canon;    // flag -> canonical label
  std::vector<Flag> from_canon;  // canonical label -> flag
  // rank -> orbit handle, per kind (0 vertex, 1 edge, 2 face)
  std::array<std::vector<Flag>, 3> rank_to_rep;
  // flag -> rank of the orbit containing it, per kind
  std::array<std::vector<std::uint32_t>, 3> rank_of;

  std::uint32_t vertex_rank(Flag x) const { return rank_of[0][x]; }
  std::uint32_t edge_rank(Flag x) const { return rank_of[1][x]; }
  std::uint32_t face_rank(Flag x) const { return rank_of[2][x]; }
};

CanonicalForm canonical_form(const TriangulationMap& T);
CanonicalKey canonical_key(const TriangulationMap& T);

// Reconstructs the canonical representative. Its canonical traversal is the
// identity relabelling, so orbit ranks coincide with first-appearance order
// of orbits when scanning flags 0,1,2,...
TriangulationMap decode_key(const CanonicalKey& k);

// First-appearance orbit handles of a decoded canonical representative;
// equals canonical_form(T).rank_to_rep[kind] but costs O(n).
std::vector<Flag> decoded_rank_to_rep(const TriangulationMap& T, unsigned kind);

}  // namespace flipkit
