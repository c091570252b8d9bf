#include "flipkit/gadgets.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "flipkit/canonical.hpp"

namespace flipkit {

namespace {

void need_regular(const TriangulationMap& T, const char* who) {
  if (!T.is_regular())
    raise(Errc::PreconditionFailed,
          std::string(who) + " needs a regular triangulation");
}

// BFS path d -> d2 in the face-dual graph; returns the face sequence.
std::vector<Flag> dual_face_path(const TriangulationMap& T, Flag d, Flag d2) {
  std::unordered_map<Flag, Flag> parent;
  parent[d] = kNoFlag;
  std::deque<Flag> queue{d};
  while (!queue.empty() && !parent.count(d2)) {
    Flag f = queue.front();
    queue.pop_front();
    Flag x1 = f, x2 = T.s(0, x1), x3 = T.s(1, x2), x4 = T.s(0, x3),
         x5 = T.s(1, x4);
    for (Flag side : {x1, x3, x5}) {
      Flag nb = T.face_of(T.s(2, side));
      if (!parent.count(nb)) {
        parent[nb] = f;
        queue.push_back(nb);
      }
    }
  }
  std::vector<Flag> path;
  for (Flag f = d2;; f = parent.at(f)) {
    path.push_back(f);
    if (f == d) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Shared T-edge between two faces known to be dual neighbours.
Flag shared_edge(const TriangulationMap& T, Flag f1, Flag f2) {
  Flag x1 = f1, x2 = T.s(0, x1), x3 = T.s(1, x2), x5 = T.s(1, T.s(0, x3));
  for (Flag side : {x1, x3, x5})
    if (T.face_of(T.s(2, side)) == f2) return T.edge_of(side);
  raise(Errc::GadgetFailed, "faces are not adjacent");
}

MoveScript checked(MoveScript s, const TriangulationMap& start,
                   const char* who) {
  ScriptVerdict vd = verify_script_verdict(s, start);
  if (!vd.ok)
    raise(Errc::GadgetFailed, std::string(who) + ": replay failed at move " +
                                  std::to_string(vd.move_index) + ": " +
                                  vd.detail);
  return s;
}

}  // namespace

MoveScript subdivision_transfer(const TriangulationMap& T, Flag d, Flag d2) {
  need_regular(T, "subdivision_transfer");
  if (d >= T.flag_count() || T.face_of(d) != d || d2 >= T.flag_count() ||
      T.face_of(d2) != d2)
    raise(Errc::InvalidHandle, "transfer endpoints must be face handles");

  TriangulationMap U = face_subdivide(T, d);
  MoveScript script;
  script.start_key = canonical_key(U);
  script.all_regular = true;

  // spokes of the cone vertex; edge orbits keep their flag sets (and hence
  // handles) across flips, so these stay valid while the cone migrates
  const Flag base = T.flag_count();
  std::array<Flag, 3> spokes{base + 0, base + 4, base + 2};
  std::vector<Flag> path = dual_face_path(T, d, d2);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    // T-edges crossed by the dual path are untouched until their step
    Flag e = shared_edge(T, path[i], path[i + 1]);
    auto eends = U.edge_endpoints(e);
    // the spoke to replace: its far corner is the one off the crossed edge
    Flag sp_c = kNoFlag;
    for (Flag sp : spokes) {
      auto se = U.edge_endpoints(sp);
      Flag w0 = se[0], w1 = se[1];
      // one endpoint is the cone vertex (common to all spokes); classify by
      // the other
      Flag other = kNoFlag;
      auto s0e = U.edge_endpoints(spokes[sp == spokes[0] ? 1 : 0]);
      if (w0 == s0e[0] || w0 == s0e[1]) other = w1;
      else other = w0;
      if (other != eends[0] && other != eends[1]) sp_c = sp;
    }
    if (sp_c == kNoFlag) raise(Errc::GadgetFailed, "cone lost its far spoke");
    CanonicalForm cf = canonical_form(U);
    script.moves.push_back({MoveKind::Flip, cf.edge_rank(e)});
    U = flip(U, e);
    cf = canonical_form(U);
    script.moves.push_back({MoveKind::Flip, cf.edge_rank(sp_c)});
    U = flip(U, sp_c);
    // the crossed edge's orbit now forms the new far spoke; the flipped
    // spoke's orbit became the restored T-edge
    std::array<Flag, 3> next{};
    std::size_t k = 0;
    for (Flag sp : spokes)
      if (sp != sp_c) next[k++] = sp;
    next[2] = e;
    spokes = next;
  }
  script.end_key = canonical_key(U);
  if (script.end_key != canonical_key(face_subdivide(T, d2)))
    raise(Errc::GadgetFailed, "transfer missed its target subdivision");
  return checked(std::move(script), face_subdivide(T, d),
                 "subdivision_transfer");
}

// ---------------------------------------------------------------------------
// lift of one flip through a barycentric subdivision
// ---------------------------------------------------------------------------

namespace {

constexpr std::uint8_t kExt = 0xff;
constexpr std::size_t kLiftStateCap = 300000;

// the twelve patch blocks in fixed order x1..x6,y1..y6, and the block pairs
// of the pre- and post-flip diagonals' s1
constexpr std::uint8_t kS1Pre[12] = {5, 2, 1, 4, 3, 0, 11, 8, 7, 10, 9, 6};
constexpr std::uint8_t kS1Post[12] = {3, 9, 8, 0, 6, 11, 4, 10, 2, 1, 7, 5};

// The fixed eight-flip dance that redraws the subdivided quadrilateral
// around the other diagonal.  Entries are patch edge slots (minimal local
// flag of the edge's orbit); the slot keeps naming the same orbit while
// the edge drawn in it changes.  With corners A,B,C,D, diagonal A-C,
// centres P (side ABC) and Q (side ACD), midpoints M_xy, the dance is
//   A-M_AC -> P-Q        Q-A -> P-M_DA      Q-M_DA -> P-D
//   P-C -> M_BC-M_AC     P-M_BC -> B-M_AC   P-Q -> M_AC-D
//   C-M_AC -> M_BC-Q     M_BC-M_AC -> B-Q
// which turns the fan pair around P,Q into the fan pair around the
// diagonal B-D.  Each step's legality depends only on the patch interior,
// so the same dance works in every host map; no step creates a loop.
constexpr std::uint8_t kUniversalLift[8] = {0, 40, 62, 10, 14, 0, 6, 10};

using State = std::string;  // 72 chars, state[i] = s1 image of patch flag i

struct LiftContext {
  const TriangulationMap* B = nullptr;  // barycentric(T)
  std::array<Flag, 12> block;          // T-flag per block
  std::vector<std::int32_t> local_of;  // B-flag -> patch local id or -1
  std::array<std::uint8_t, 72> s0l;
  std::array<std::uint8_t, 72> s2l;        // kExt when it leaves the patch
  std::array<std::uint8_t, 72> s2l_post;   // same for barycentric(flip(T,e))
  std::vector<std::uint8_t> patch_edges;   // minimal local ids, ascending
  bool has_anchor = false;

  Flag global(std::uint8_t l) const { return 6 * block[l / 6] + l % 6; }

  std::uint8_t s1_of(const State& st, std::uint8_t l) const {
    return static_cast<std::uint8_t>(st[l]);
  }
};

LiftContext make_context(const TriangulationMap& T, Flag e,
                         const TriangulationMap& B) {
  LiftContext cx;
  cx.B = &B;
  Flag x1 = e, x2 = T.s(0, x1), x3 = T.s(1, x2), x4 = T.s(0, x3),
       x5 = T.s(1, x4), x6 = T.s(0, x5);
  Flag y1 = T.s(2, x1), y2 = T.s(0, y1), y3 = T.s(1, y2), y4 = T.s(0, y3),
       y5 = T.s(1, y4), y6 = T.s(0, y5);
  cx.block = {x1, x2, x3, x4, x5, x6, y1, y2, y3, y4, y5, y6};
  cx.local_of.assign(B.flag_count(), -1);
  for (unsigned b = 0; b < 12; ++b)
    for (unsigned j = 0; j < 6; ++j)
      cx.local_of[6 * cx.block[b] + j] = static_cast<std::int32_t>(6 * b + j);
  auto block_index = [&](Flag g) -> std::int32_t {
    for (unsigned b = 0; b < 12; ++b)
      if (cx.block[b] == g) return static_cast<std::int32_t>(b);
    return -1;
  };
  for (unsigned b = 0; b < 12; ++b) {
    const std::uint8_t base = static_cast<std::uint8_t>(6 * b);
    cx.s0l[base + 0] = base + 1; cx.s0l[base + 1] = base + 0;
    cx.s0l[base + 2] = base + 3; cx.s0l[base + 3] = base + 2;
    cx.s0l[base + 4] = base + 5; cx.s0l[base + 5] = base + 4;
    Flag g = cx.block[b];
    std::int32_t b2 = block_index(T.s(2, g));   // vertex-midpoint side
    std::int32_t b0 = block_index(T.s(0, g));   // midpoint-centre side
    for (unsigned j : {0u, 1u})
      cx.s2l[base + j] = b2 < 0 ? kExt
                                : static_cast<std::uint8_t>(6 * b2 + j);
    for (unsigned j : {2u, 3u})
      cx.s2l[base + j] = static_cast<std::uint8_t>(6 * b0 + j);
    for (unsigned j : {4u, 5u})
      cx.s2l[base + j] = static_cast<std::uint8_t>(6 * kS1Pre[b] + j);
  }
  cx.s2l_post = cx.s2l;
  for (unsigned b = 0; b < 12; ++b)
    for (unsigned j : {4u, 5u})
      cx.s2l_post[6 * b + j] = static_cast<std::uint8_t>(6 * kS1Post[b] + j);
  for (std::uint8_t l = 0; l < 72; ++l) {
    if (cx.s2l[l] == kExt) {
      cx.has_anchor = true;
      continue;
    }
    std::uint8_t orbit_min =
        std::min({l, cx.s0l[l], cx.s2l[l], cx.s0l[cx.s2l[l]]});
    if (orbit_min == l) cx.patch_edges.push_back(l);
  }
  return cx;
}

State initial_state() {
  State st(72, '\0');
  for (unsigned b = 0; b < 12; ++b) {
    const unsigned base = 6 * b;
    st[base + 1] = static_cast<char>(base + 2);
    st[base + 2] = static_cast<char>(base + 1);
    st[base + 3] = static_cast<char>(base + 4);
    st[base + 4] = static_cast<char>(base + 3);
    st[base + 5] = static_cast<char>(base + 0);
    st[base + 0] = static_cast<char>(base + 5);
  }
  return st;
}

// Vertex orbit of a patch flag in the full map under the state's s1;
// only s2 can leave the patch, where B's frozen exterior applies.
bool same_vertex(const LiftContext& cx, const State& st, std::uint8_t a,
                 std::uint8_t b) {
  Flag goal = cx.global(b);
  std::vector<Flag> orbit{cx.global(a)};
  std::vector<Flag> stack{cx.global(a)};
  auto seen = [&](Flag f) {
    return std::find(orbit.begin(), orbit.end(), f) != orbit.end();
  };
  while (!stack.empty()) {
    Flag f = stack.back();
    stack.pop_back();
    std::int32_t l = cx.local_of[f];
    Flag n1 = l >= 0 ? cx.global(cx.s1_of(st, static_cast<std::uint8_t>(l)))
                     : cx.B->s(1, f);
    Flag n2 = cx.B->s(2, f);
    for (Flag n : {n1, n2}) {
      if (n == goal) return true;
      if (!seen(n)) {
        orbit.push_back(n);
        stack.push_back(n);
      }
    }
  }
  return false;
}

// Flip surgery on a state. Returns false when the edge is not flippable
// (one face) or the flip would close a loop.
bool state_flip(const LiftContext& cx, const State& st, std::uint8_t edge,
                State& out) {
  std::uint8_t x1 = edge, x2 = cx.s0l[x1], y1 = cx.s2l[x1];
  std::uint8_t y2 = cx.s0l[y1];
  std::uint8_t x3 = cx.s1_of(st, x2), x4 = cx.s0l[x3];
  std::uint8_t x5 = cx.s1_of(st, x4), x6 = cx.s0l[x5];
  std::uint8_t y3 = cx.s1_of(st, y2), y4 = cx.s0l[y3];
  std::uint8_t y5 = cx.s1_of(st, y4), y6 = cx.s0l[y5];
  // same face?
  for (std::uint8_t f : {x1, x2, x3, x4, x5, x6})
    if (f == y1) return false;
  // the new edge joins the two apexes; forbid loops
  if (same_vertex(cx, st, x4, y4)) return false;
  out = st;
  auto pair = [&](std::uint8_t a, std::uint8_t b) {
    out[a] = static_cast<char>(b);
    out[b] = static_cast<char>(a);
  };
  pair(x1, x4);
  pair(x2, y4);
  pair(x3, y3);
  pair(x5, y1);
  pair(x6, y6);
  pair(y2, y5);
  return true;
}

// Goal test: does an exterior-fixing isomorphism take barycentric(flip(T,e))
// to the map whose patch s1 is `st`? The isomorphism is pinned on the slots
// whose s2 leaves the patch and propagates uniquely from there.
bool goal_state(const LiftContext& cx, const State& st) {
  std::array<std::uint8_t, 72> psi;
  psi.fill(kExt);
  std::array<bool, 72> used{};
  std::vector<std::uint8_t> work;
  auto assign = [&](std::uint8_t a, std::uint8_t b) {
    if (psi[a] != kExt) return psi[a] == b;
    if (used[b]) return false;
    psi[a] = b;
    used[b] = true;
    work.push_back(a);
    return true;
  };
  for (std::uint8_t l = 0; l < 72; ++l)
    if (cx.s2l[l] == kExt && !assign(l, l)) return false;
  if (work.empty()) return false;  // anchorless patches handled elsewhere
  static const State sigma1 = initial_state();
  while (!work.empty()) {
    std::uint8_t a = work.back();
    work.pop_back();
    std::uint8_t b = psi[a];
    if (!assign(cx.s0l[a], cx.s0l[b])) return false;
    if (!assign(static_cast<std::uint8_t>(sigma1[a]), cx.s1_of(st, b)))
      return false;
    std::uint8_t a2 = cx.s2l_post[a];
    std::uint8_t b2 = cx.s2l[b];
    if (a2 == kExt || b2 == kExt) {
      if (a2 != b2 || a != b) return false;
      continue;
    }
    if (!assign(a2, b2)) return false;
  }
  for (std::uint8_t l = 0; l < 72; ++l)
    if (psi[l] == kExt) return false;
  return true;
}

// Breadth-first search from the block pattern to any goal state.
// Moves are minimal local flag ids of the flipped edges.
bool lift_search(const LiftContext& cx, std::vector<std::uint8_t>& moves) {
  struct Node {
    const State* parent;
    std::uint8_t edge;
  };
  std::unordered_map<State, Node> visited;
  std::deque<const State*> queue;
  State start = initial_state();
  auto [it0, fresh0] = visited.emplace(start, Node{nullptr, 0});
  auto unwind = [&](const State& s) {
    moves.clear();
    const State* cur = &s;
    while (true) {
      const Node& nd = visited.at(*cur);
      if (!nd.parent) break;
      moves.push_back(nd.edge);
      cur = nd.parent;
    }
    std::reverse(moves.begin(), moves.end());
  };
  if (goal_state(cx, start)) {
    moves.clear();
    return true;
  }
  queue.push_back(&it0->first);
  State next;
  while (!queue.empty()) {
    const State* cur = queue.front();
    queue.pop_front();
    for (std::uint8_t edge : cx.patch_edges) {
      if (!state_flip(cx, *cur, edge, next)) continue;
      if (visited.count(next)) continue;
      if (visited.size() >= kLiftStateCap) {
        if (std::getenv("FLIPKIT_LIFT_DEBUG"))
          std::fprintf(stderr, "[lift] cap hit: visited=%zu edges=%zu\n",
                       visited.size(), cx.patch_edges.size());
        return false;
      }
      auto [it, fresh] = visited.emplace(next, Node{cur, edge});
      if (goal_state(cx, it->first)) {
        unwind(it->first);
        return true;
      }
      queue.push_back(&it->first);
    }
  }
  if (std::getenv("FLIPKIT_LIFT_DEBUG"))
    std::fprintf(stderr, "[lift] space exhausted: visited=%zu edges=%zu\n",
                 visited.size(), cx.patch_edges.size());
  return false;
}

// Anchorless case (the patch is the whole surface): breadth-first search
// with whole-map key comparison; only reachable for tiny maps.
bool lift_search_global(const LiftContext& cx, const CanonicalKey& target,
                        std::vector<std::uint8_t>& moves) {
  struct Node {
    const State* parent;
    std::uint8_t edge;
  };
  std::unordered_map<State, Node> visited;
  std::deque<const State*> queue;
  auto realize_key = [&](const State& st) {
    std::vector<Flag> s1 = cx.B->involution(1);
    for (std::uint8_t l = 0; l < 72; ++l)
      s1[cx.global(l)] = cx.global(cx.s1_of(st, l));
    return canonical_key(make_map_unchecked(cx.B->involution(0), std::move(s1),
                                            cx.B->involution(2)));
  };
  State start = initial_state();
  auto [it0, fresh0] = visited.emplace(start, Node{nullptr, 0});
  auto unwind = [&](const State& s) {
    moves.clear();
    const State* cur = &s;
    while (true) {
      const Node& nd = visited.at(*cur);
      if (!nd.parent) break;
      moves.push_back(nd.edge);
      cur = nd.parent;
    }
    std::reverse(moves.begin(), moves.end());
  };
  if (realize_key(start) == target) {
    moves.clear();
    return true;
  }
  queue.push_back(&it0->first);
  State next;
  while (!queue.empty()) {
    const State* cur = queue.front();
    queue.pop_front();
    for (std::uint8_t edge : cx.patch_edges) {
      if (!state_flip(cx, *cur, edge, next)) continue;
      if (visited.count(next)) continue;
      if (visited.size() >= kLiftStateCap) return false;
      auto [it, fresh] = visited.emplace(next, Node{cur, edge});
      if (realize_key(it->first) == target) {
        unwind(it->first);
        return true;
      }
      queue.push_back(&it->first);
    }
  }
  return false;
}

}  // namespace

MoveScript lift_flip_to_bary(const TriangulationMap& T, Flag e) {
  if (!can_flip(T, e))
    raise(Errc::FlipBlocked, "edge " + std::to_string(e) + " is not flippable");
  TriangulationMap B = barycentric(T);
  TriangulationMap targetB = barycentric(flip(T, e));
  CanonicalKey target_key = canonical_key(targetB);
  LiftContext cx = make_context(T, e, B);

  auto realize = [&](const std::vector<std::uint8_t>& lm,
                     MoveScript& script) -> bool {
    TriangulationMap U = B;
    script = MoveScript{};
    script.start_key = canonical_key(B);
    script.all_regular = true;
    for (std::uint8_t l : lm) {
      Flag h = std::min({cx.global(l), cx.global(cx.s0l[l]),
                         cx.global(cx.s2l[l]),
                         cx.global(cx.s0l[cx.s2l[l]])});
      if (U.edge_of(h) != h || !can_flip(U, h)) return false;
      if (!is_regular_flip(U, h)) script.all_regular = false;
      CanonicalForm cf = canonical_form(U);
      script.moves.push_back({MoveKind::Flip, cf.edge_rank(h)});
      U = flip(U, h);
    }
    script.end_key = canonical_key(U);
    return script.end_key == target_key;
  };

  // the dance first; searches only as a safety net for hosts it misses
  std::vector<std::uint8_t> local_moves;
  State st = initial_state();
  bool danced = true;
  for (std::uint8_t slot : kUniversalLift) {
    State next;
    if (!state_flip(cx, st, slot, next)) {
      danced = false;
      break;
    }
    st = next;
    local_moves.push_back(slot);
  }
  MoveScript script;
  if (danced && realize(local_moves, script))
    return checked(std::move(script), B, "lift_flip_to_bary");
  if (std::getenv("FLIPKIT_LIFT_DEBUG"))
    std::fprintf(stderr, "[lift] fixed dance missed, searching\n");
  bool found = cx.has_anchor && lift_search(cx, local_moves);
  if (!found)
    found = lift_search_global(cx, target_key, local_moves);
  if (!found)
    raise(Errc::LiftNotFound,
          "no patch flip sequence within the state budget");
  if (!realize(local_moves, script))
    raise(Errc::GadgetFailed, "lift replay missed the subdivided flip");
  return checked(std::move(script), B, "lift_flip_to_bary");
}

MoveScript lift_flip_to_bary2(const TriangulationMap& T, Flag e) {
  if (!can_flip(T, e))
    raise(Errc::FlipBlocked, "edge " + std::to_string(e) + " is not flippable");
  TriangulationMap B = barycentric(T);
  MoveScript inner = lift_flip_to_bary(T, e);

  MoveScript script;
  script.start_key = canonical_key(barycentric(B));
  script.all_regular = true;
  script.end_key = script.start_key;
  TriangulationMap U = B;
  for (const Move& m : inner.moves) {
    CanonicalForm cf = canonical_form(U);
    Flag h = resolve_target(cf, m);
    MoveScript step = lift_flip_to_bary(U, h);
    if (!step.all_regular) script.all_regular = false;
    script.moves.insert(script.moves.end(), step.moves.begin(),
                        step.moves.end());
    script.end_key = step.end_key;
    U = flip(U, h);
  }
  return checked(std::move(script), barycentric(B), "lift_flip_to_bary2");
}

MoveScript bary_by_subdivisions(const TriangulationMap& T) {
  need_regular(T, "bary_by_subdivisions");
  MoveScript script;
  script.start_key = canonical_key(T);
  script.all_regular = true;

  TriangulationMap U = T;
  auto stage = [&](const TriangulationMap& M) {
    // A: cone every face; face orbits elsewhere keep their flags
    std::vector<Flag> original_faces = U.faces();
    for (Flag f : original_faces) {
      CanonicalForm cf = canonical_form(U);
      script.moves.push_back({MoveKind::FaceSubdivide, cf.face_rank(f)});
      U = face_subdivide(U, f);
    }
    // B: per original edge, cone one side and flip the edge away; the new
    // vertex becomes the edge midpoint joined to both face centres
    std::vector<Flag> original_edges = M.edges();
    for (Flag e : original_edges) {
      CanonicalForm cf = canonical_form(U);
      Flag f1 = U.face_of(e), f2 = U.face_of(U.s(2, e));
      Flag side = cf.face_rank(f1) <= cf.face_rank(f2) ? f1 : f2;
      script.moves.push_back({MoveKind::FaceSubdivide, cf.face_rank(side)});
      U = face_subdivide(U, side);
      cf = canonical_form(U);
      script.moves.push_back({MoveKind::Flip, cf.edge_rank(e)});
      U = flip(U, e);
    }
  };
  TriangulationMap M1 = U;
  stage(M1);
  if (canonical_key(U) != canonical_key(barycentric(M1)))
    raise(Errc::GadgetFailed, "first stage is not a subdivision");
  TriangulationMap M2 = U;
  stage(M2);
  if (canonical_key(U) != canonical_key(barycentric(M2)))
    raise(Errc::GadgetFailed, "second stage is not a subdivision");
  script.end_key = canonical_key(U);
  return checked(std::move(script), T, "bary_by_subdivisions");
}

}  // namespace flipkit
