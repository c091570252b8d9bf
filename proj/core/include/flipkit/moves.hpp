#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flipkit/canonical.hpp"
#include "flipkit/map.hpp"

namespace flipkit {

enum class MoveKind : std::uint8_t { Flip, Contract, FaceSubdivide };

const char* move_kind_name(MoveKind k);
std::optional<MoveKind> move_kind_by_name(const std::string& s);

// A move's target is the rank of the target orbit (edge for Flip/Contract,
// face for FaceSubdivide) in the canonical traversal order of the pre-move
// map, so scripts survive flag relabelling.
struct Move {
  MoveKind kind = MoveKind::Flip;
  std::uint32_t target = 0;
  bool operator==(const Move&) const = default;
};

struct MoveScript {
  CanonicalKey start_key;
  CanonicalKey end_key;
  bool all_regular = false;
  std::vector<Move> moves;
};

// ---- elementary moves (flag-level handles) ----

// True iff the two faces at e are distinct (degenerate quadrilaterals allowed).
bool can_flip(const TriangulationMap& T, Flag e);
// Replaces e by the opposite diagonal of the quadrilateral formed by the two
// faces at e. Error FlipBlocked / InvalidHandle.
TriangulationMap flip(const TriangulationMap& T, Flag e);
// is_regular(T) && can_flip && is_regular(flip(T,e)).
bool is_regular_flip(const TriangulationMap& T, Flag e);

struct ContractResult {
  TriangulationMap map;
  std::vector<Flag> old_to_new;  // kNoFlag for the 12 deleted flags
};
// Shrinks e to a vertex, deleting the two faces at e and identifying their
// paired boundary edges. Requires structural safety (e not a loop, distinct
// faces, surgery-disjoint surroundings); Error ContractBlocked otherwise.
// The result may be singular; see can_contract for the regular notion.
ContractResult contract_with_mapping(const TriangulationMap& T, Flag e);
TriangulationMap contract(const TriangulationMap& T, Flag e);
// Operational definition: contraction is possible and its result is regular.
bool can_contract(const TriangulationMap& T, Flag e);
// Link-condition accelerator; agrees with can_contract on regular maps.
bool can_contract_link(const TriangulationMap& T, Flag e);

// Replaces face d by the cone over its boundary (new vertex of degree 3).
TriangulationMap face_subdivide(const TriangulationMap& T, Flag d);

// Full barycentric subdivision (vertex per edge and per face, 6f faces).
TriangulationMap barycentric(const TriangulationMap& T);

// m face subdivisions, each at the face of canonical rank 0.
TriangulationMap iterated_subdivision(const TriangulationMap& T,
                                      std::uint32_t m);

// ---- scripts ----

// Greedy contraction in canonical edge order until irreducible.
struct ReduceResult {
  TriangulationMap irreducible;
  MoveScript contractions;
};
ReduceResult reduce_to_irreducible(const TriangulationMap& T);

// Replays a script from T (whose key must equal the declared start key).
TriangulationMap apply_script(const TriangulationMap& T,
                              const MoveScript& script);

struct ScriptVerdict {
  bool ok = true;
  Errc code = Errc::BadFormat;   // meaningful when !ok
  std::uint32_t move_index = 0;  // move at fault when applicable
  std::string detail;
};
// Replay with checks: start key, addressing, move validity, end key, and
// regularity of every flip when the script declares all_regular.
ScriptVerdict verify_script_verdict(const MoveScript& script,
                                    const TriangulationMap& T_start);
bool verify_script(const MoveScript& script, const TriangulationMap& T_start);

// Resolves a move target rank against a concrete map.
Flag resolve_target(const CanonicalForm& cf, const Move& m);

// Inverse script: replays forward to record each move's inverse address.
// Contract moves must contract an edge with a degree-3 endpoint (they are
// inverse face subdivisions); Error PreconditionFailed otherwise.
MoveScript reverse_script(const MoveScript& script,
                          const TriangulationMap& T_start);

}  // namespace flipkit
