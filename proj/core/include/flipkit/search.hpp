#pragma once

#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "flipkit/canonical.hpp"
#include "flipkit/map.hpp"
#include "flipkit/moves.hpp"

namespace flipkit {

enum class FlipMode { RegularFlips, AllFlips };

struct SearchBudget {
  std::uint64_t max_nodes = 1000000;
  std::uint64_t max_depth = std::numeric_limits<std::uint64_t>::max();
};

inline constexpr std::uint32_t kNoParent = 0xffffffffu;

// Isomorphism-reduced flip-graph BFS store. Nodes are canonical keys in BFS
// discovery order; representatives are decoded from keys on demand.
struct FlipGraphStore {
  struct Node {
    CanonicalKey key;
    std::uint32_t parent = kNoParent;  // index into nodes
    Move parent_move{};                // applied to the parent's representative
    std::uint32_t depth = 0;
    std::uint32_t v = 0;
    bool regular = false;
  };
  struct Edge {
    std::uint32_t from = 0, to = 0;
    Move move{};  // flip applied to from's representative
  };

  FlipMode mode = FlipMode::AllFlips;
  bool complete = true;  // false when a budget cut the exploration short
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  std::unordered_map<CanonicalKey, std::uint32_t, KeyHash> index;
};

// Deterministic BFS closure of the roots under the mode's flips.
// threads > 1 expands each BFS layer in parallel with identical results.
FlipGraphStore explore(const std::vector<TriangulationMap>& roots,
                       FlipMode mode, const SearchBudget& budget,
                       unsigned threads = 1);

// Shortest flip script from T1 to a map isomorphic to T2 (BFS order).
// Error NotConnected when the component is exhausted without a hit,
// Error Exhausted when the budget runs out first.
MoveScript find_path(const TriangulationMap& T1, const TriangulationMap& T2,
                     FlipMode mode, const SearchBudget& budget,
                     unsigned threads = 1);

// All singular triangulations of the surface with v vertices, as the AllFlips
// closure of the standard seed. complete=false when the budget was hit.
FlipGraphStore enumerate_triangulations(const SurfaceClass& surface,
                                        std::uint32_t v,
                                        const SearchBudget& budget,
                                        unsigned threads = 1);

// Extracts the move script along stored parent links (root -> node).
MoveScript path_from_store(const FlipGraphStore& store, std::uint32_t node);

}  // namespace flipkit
