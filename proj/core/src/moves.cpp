#include "flipkit/moves.hpp"

#include <algorithm>
#include <set>

namespace flipkit {

const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::Flip: return "flip";
    case MoveKind::Contract: return "contract";
    case MoveKind::FaceSubdivide: return "subdivide";
  }
  return "?";
}

std::optional<MoveKind> move_kind_by_name(const std::string& s) {
  if (s == "flip") return MoveKind::Flip;
  if (s == "contract") return MoveKind::Contract;
  if (s == "subdivide") return MoveKind::FaceSubdivide;
  return std::nullopt;
}

namespace {

// The two triangles at edge e as the 12-flag patch used by flip and
// contract. Walking each hexagon from the edge: x1 -s0- x2 -s1- x3 -s0-
// x4 -s1- x5 -s0- x6 -s1- x1, so corners sit at the s1-pairs
// (x2,x3), (x4,x5), (x6,x1); the x4/x5 corner is the apex off e.
struct EdgePatch {
  Flag x1, x2, x3, x4, x5, x6;
  Flag y1, y2, y3, y4, y5, y6;
};

EdgePatch edge_patch(const TriangulationMap& T, Flag e) {
  EdgePatch p;
  p.x1 = e;
  p.x2 = T.s(0, p.x1);
  p.x3 = T.s(1, p.x2);
  p.x4 = T.s(0, p.x3);
  p.x5 = T.s(1, p.x4);
  p.x6 = T.s(0, p.x5);
  p.y1 = T.s(2, p.x1);
  p.y2 = T.s(0, p.y1);
  p.y3 = T.s(1, p.y2);
  p.y4 = T.s(0, p.y3);
  p.y5 = T.s(1, p.y4);
  p.y6 = T.s(0, p.y5);
  return p;
}

void check_edge_handle(const TriangulationMap& T, Flag e) {
  if (e >= T.flag_count() || T.edge_of(e) != e)
    raise(Errc::InvalidHandle, "not an edge handle: " + std::to_string(e));
}

}  // namespace

bool can_flip(const TriangulationMap& T, Flag e) {
  check_edge_handle(T, e);
  return T.face_of(e) != T.face_of(T.s(2, e));
}

TriangulationMap flip(const TriangulationMap& T, Flag e) {
  if (!can_flip(T, e))
    raise(Errc::FlipBlocked, "both sides of edge " + std::to_string(e) +
                                 " lie in one face");
  EdgePatch p = edge_patch(T, e);
  std::vector<Flag> s1 = T.involution(1);
  auto pair = [&](Flag a, Flag b) { s1[a] = b; s1[b] = a; };
  // rotate the diagonal: the edge's four flags move to the former apexes
  pair(p.x1, p.x4);
  pair(p.x2, p.y4);
  pair(p.x3, p.y3);
  pair(p.x5, p.y1);
  pair(p.x6, p.y6);
  pair(p.y2, p.y5);
  return make_map_unchecked(T.involution(0), std::move(s1), T.involution(2));
}

bool is_regular_flip(const TriangulationMap& T, Flag e) {
  if (!T.is_regular() || !can_flip(T, e)) return false;
  return flip(T, e).is_regular();
}

namespace {

// contract surgery is well defined iff e is not a loop, its faces differ,
// and the eight flags across the four side edges lie outside the patch
bool contract_safety(const TriangulationMap& T, Flag e, EdgePatch& p) {
  auto ends = T.edge_endpoints(e);
  if (ends[0] == ends[1]) return false;
  if (T.face_of(e) == T.face_of(T.s(2, e))) return false;
  p = edge_patch(T, e);
  const std::set<Flag> patch{p.x1, p.x2, p.x3, p.x4, p.x5, p.x6,
                             p.y1, p.y2, p.y3, p.y4, p.y5, p.y6};
  for (Flag side : {p.x3, p.x4, p.x5, p.x6, p.y3, p.y4, p.y5, p.y6})
    if (patch.count(T.s(2, side))) return false;
  return true;
}

}  // namespace

ContractResult contract_with_mapping(const TriangulationMap& T, Flag e) {
  check_edge_handle(T, e);
  EdgePatch p;
  if (!contract_safety(T, e, p))
    raise(Errc::ContractBlocked,
          "edge " + std::to_string(e) + " cannot be shrunk");
  const std::uint32_t n = T.flag_count();
  std::vector<Flag> old_to_new(n, kNoFlag);
  std::vector<char> dead(n, 0);
  for (Flag x : {p.x1, p.x2, p.x3, p.x4, p.x5, p.x6, p.y1, p.y2, p.y3, p.y4,
                 p.y5, p.y6})
    dead[x] = 1;
  std::uint32_t next = 0;
  for (std::uint32_t x = 0; x < n; ++x)
    if (!dead[x]) old_to_new[x] = next++;
  // the deleted triangles' paired sides glue to each other
  std::vector<Flag> s2 = T.involution(2);
  auto pair2 = [&](Flag a, Flag b) { s2[a] = b; s2[b] = a; };
  pair2(T.s(2, p.x3), T.s(2, p.x6));
  pair2(T.s(2, p.x4), T.s(2, p.x5));
  pair2(T.s(2, p.y3), T.s(2, p.y6));
  pair2(T.s(2, p.y4), T.s(2, p.y5));
  std::vector<Flag> ns0(next), ns1(next), ns2(next);
  for (std::uint32_t x = 0; x < n; ++x) {
    if (dead[x]) continue;
    ns0[old_to_new[x]] = old_to_new[T.s(0, x)];
    ns1[old_to_new[x]] = old_to_new[T.s(1, x)];
    ns2[old_to_new[x]] = old_to_new[s2[x]];
  }
  return {TriangulationMap::from_map_arrays(ns0, ns1, ns2),
          std::move(old_to_new)};
}

TriangulationMap contract(const TriangulationMap& T, Flag e) {
  return contract_with_mapping(T, e).map;
}

bool can_contract(const TriangulationMap& T, Flag e) {
  check_edge_handle(T, e);
  EdgePatch p;
  if (!contract_safety(T, e, p)) return false;
  return contract(T, e).is_regular();
}

bool can_contract_link(const TriangulationMap& T, Flag e) {
  check_edge_handle(T, e);
  if (!T.is_regular()) return can_contract(T, e);  // no shortcut off the
                                                   // regular stratum
  auto ends = T.edge_endpoints(e);
  if (ends[0] == ends[1]) return false;
  if (T.counts().f <= 5) return false;
  // contractible iff the endpoints' links share exactly the two apexes
  std::set<Flag> nb;
  for (const auto& step : T.link_of_vertex(ends[0])) nb.insert(step.vertex);
  std::uint32_t common = 0;
  std::set<Flag> seen;
  for (const auto& step : T.link_of_vertex(ends[1]))
    if (nb.count(step.vertex) && seen.insert(step.vertex).second) ++common;
  return common == 2;
}

TriangulationMap face_subdivide(const TriangulationMap& T, Flag d) {
  if (d >= T.flag_count() || T.face_of(d) != d)
    raise(Errc::InvalidHandle, "not a face handle: " + std::to_string(d));
  const std::uint32_t n = T.flag_count();
  Flag x1 = d, x2 = T.s(0, x1), x3 = T.s(1, x2), x4 = T.s(0, x3),
       x5 = T.s(1, x4), x6 = T.s(0, x5);
  // cone over the hexagon: 12 new flags in three blocks of four,
  // one block per new face beyond the reused side
  const Flag n1 = n + 0, n2 = n + 1, n3 = n + 2, n4 = n + 3;
  const Flag m1 = n + 4, m2 = n + 5, m3 = n + 6, m4 = n + 7;
  const Flag p1 = n + 8, p2 = n + 9, p3 = n + 10, p4 = n + 11;
  std::vector<Flag> s0 = T.involution(0), s1 = T.involution(1),
                    s2 = T.involution(2);
  s0.resize(n + 12);
  s1.resize(n + 12);
  s2.resize(n + 12);
  auto set0 = [&](Flag a, Flag b) { s0[a] = b; s0[b] = a; };
  auto set1 = [&](Flag a, Flag b) { s1[a] = b; s1[b] = a; };
  auto set2 = [&](Flag a, Flag b) { s2[a] = b; s2[b] = a; };
  set0(n1, n2); set0(n3, n4);
  set0(m1, m2); set0(m3, m4);
  set0(p1, p2); set0(p3, p4);
  set1(x2, n1); set1(n2, n3); set1(n4, x1);
  set1(x4, m1); set1(m2, m3); set1(m4, x3);
  set1(x6, p1); set1(p2, p3); set1(p4, x5);
  set2(n1, m4); set2(n2, m3);
  set2(m1, p4); set2(m2, p3);
  set2(p1, n4); set2(p2, n3);
  return make_map_unchecked(std::move(s0), std::move(s1), std::move(s2));
}

TriangulationMap barycentric(const TriangulationMap& T) {
  const std::uint32_t n = T.flag_count();
  // flag g becomes the small triangle (vertex of g, midpoint of g's edge,
  // centre of g's face) on flags 6g..6g+5
  std::vector<Flag> s0(6 * n), s1(6 * n), s2(6 * n);
  for (Flag g = 0; g < n; ++g) {
    const Flag b = 6 * g;
    s0[b + 0] = b + 1; s0[b + 1] = b + 0;
    s0[b + 2] = b + 3; s0[b + 3] = b + 2;
    s0[b + 4] = b + 5; s0[b + 5] = b + 4;
    s1[b + 1] = b + 2; s1[b + 2] = b + 1;
    s1[b + 3] = b + 4; s1[b + 4] = b + 3;
    s1[b + 5] = b + 0; s1[b + 0] = b + 5;
    s2[b + 0] = 6 * T.s(2, g) + 0;
    s2[b + 1] = 6 * T.s(2, g) + 1;
    s2[b + 2] = 6 * T.s(0, g) + 2;
    s2[b + 3] = 6 * T.s(0, g) + 3;
    s2[b + 4] = 6 * T.s(1, g) + 4;
    s2[b + 5] = 6 * T.s(1, g) + 5;
  }
  return make_map_unchecked(std::move(s0), std::move(s1), std::move(s2));
}

TriangulationMap iterated_subdivision(const TriangulationMap& T,
                                      std::uint32_t m) {
  TriangulationMap cur = T;
  for (std::uint32_t i = 0; i < m; ++i) {
    CanonicalForm cf = canonical_form(cur);
    cur = face_subdivide(cur, cf.rank_to_rep[2][0]);
  }
  return cur;
}

ReduceResult reduce_to_irreducible(const TriangulationMap& T) {
  ReduceResult r{T, {}};
  r.contractions.start_key = canonical_key(T);
  r.contractions.all_regular = true;
  for (;;) {
    CanonicalForm cf = canonical_form(r.irreducible);
    bool found = false;
    for (std::uint32_t rank = 0; rank < cf.rank_to_rep[1].size(); ++rank) {
      Flag h = cf.rank_to_rep[1][rank];
      if (can_contract(r.irreducible, h)) {
        r.contractions.moves.push_back({MoveKind::Contract, rank});
        r.irreducible = contract(r.irreducible, h);
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  r.contractions.end_key = canonical_key(r.irreducible);
  return r;
}

Flag resolve_target(const CanonicalForm& cf, const Move& m) {
  unsigned kind = m.kind == MoveKind::FaceSubdivide ? 2u : 1u;
  if (m.target >= cf.rank_to_rep[kind].size())
    raise(Errc::AddressOutOfRange,
          std::string(move_kind_name(m.kind)) + " target " +
              std::to_string(m.target) + " out of range (" +
              std::to_string(cf.rank_to_rep[kind].size()) + " orbits)");
  return cf.rank_to_rep[kind][m.target];
}

namespace {

TriangulationMap apply_move(const TriangulationMap& T, MoveKind kind, Flag h) {
  switch (kind) {
    case MoveKind::Flip: return flip(T, h);
    case MoveKind::Contract: return contract(T, h);
    case MoveKind::FaceSubdivide: return face_subdivide(T, h);
  }
  raise(Errc::PreconditionFailed, "bad move kind");
}

}  // namespace

TriangulationMap apply_script(const TriangulationMap& T,
                              const MoveScript& script) {
  if (canonical_key(T) != script.start_key)
    raise(Errc::StartKeyMismatch, "map does not match the script start");
  TriangulationMap cur = T;
  for (const Move& m : script.moves) {
    CanonicalForm cf = canonical_form(cur);
    cur = apply_move(cur, m.kind, resolve_target(cf, m));
  }
  if (canonical_key(cur) != script.end_key)
    raise(Errc::EndKeyMismatch, "replay does not reach the declared end");
  return cur;
}

ScriptVerdict verify_script_verdict(const MoveScript& script,
                                    const TriangulationMap& T_start) {
  auto fail = [](Errc code, std::uint32_t idx, std::string detail) {
    return ScriptVerdict{false, code, idx, std::move(detail)};
  };
  if (canonical_key(T_start) != script.start_key)
    return fail(Errc::StartKeyMismatch, 0, "start key does not match the map");
  TriangulationMap cur = T_start;
  for (std::uint32_t i = 0; i < script.moves.size(); ++i) {
    const Move& m = script.moves[i];
    try {
      CanonicalForm cf = canonical_form(cur);
      Flag h = resolve_target(cf, m);
      if (script.all_regular && m.kind == MoveKind::Flip &&
          can_flip(cur, h) && !is_regular_flip(cur, h))
        return fail(Errc::NonRegularFlipInRegularScript, i,
                    "flip leaves the regular stratum");
      cur = apply_move(cur, m.kind, h);
    } catch (const Error& e) {
      return fail(e.code(), i, e.what());
    }
  }
  if (canonical_key(cur) != script.end_key)
    return fail(Errc::EndKeyMismatch,
                static_cast<std::uint32_t>(script.moves.size()),
                "replay does not reach the declared end");
  return {};
}

bool verify_script(const MoveScript& script, const TriangulationMap& T_start) {
  return verify_script_verdict(script, T_start).ok;
}

MoveScript reverse_script(const MoveScript& script,
                          const TriangulationMap& T_start) {
  if (canonical_key(T_start) != script.start_key)
    raise(Errc::StartKeyMismatch, "map does not match the script start");
  TriangulationMap cur = T_start;
  std::vector<Move> inverse;
  inverse.reserve(script.moves.size());
  for (const Move& m : script.moves) {
    CanonicalForm cf = canonical_form(cur);
    Flag h = resolve_target(cf, m);
    switch (m.kind) {
      case MoveKind::Flip: {
        // the edge keeps its four flags, hence its handle, across the flip
        TriangulationMap next = flip(cur, h);
        CanonicalForm nf = canonical_form(next);
        inverse.push_back({MoveKind::Flip, nf.edge_rank(h)});
        cur = std::move(next);
        break;
      }
      case MoveKind::FaceSubdivide: {
        TriangulationMap next = face_subdivide(cur, h);
        CanonicalForm nf = canonical_form(next);
        // the cone vertex hangs on flag_count(cur)+1; undo along any of its
        // three spokes, lowest rank for determinism
        Flag w = next.vertex_of(cur.flag_count() + 1);
        std::uint32_t best = kNoFlag;
        for (const auto& step : next.link_of_vertex(w))
          best = std::min(best, nf.edge_rank(step.edge));
        inverse.push_back({MoveKind::Contract, best});
        cur = std::move(next);
        break;
      }
      case MoveKind::Contract: {
        auto ends = cur.edge_endpoints(h);
        Flag w = kNoFlag;
        if (cur.vertex_degree(ends[0]) == 3) w = ends[0];
        else if (cur.vertex_degree(ends[1]) == 3) w = ends[1];
        if (w == kNoFlag)
          raise(Errc::PreconditionFailed,
                "contract without a degree-3 endpoint has no subdivide "
                "inverse");
        // the face at w avoiding the contracted edge survives; subdividing
        // it restores the cone
        Flag f1 = cur.face_of(h), f2 = cur.face_of(cur.s(2, h));
        Flag restored = kNoFlag;
        Flag x = w;
        do {
          Flag f = cur.face_of(x);
          if (f != f1 && f != f2) restored = f;
          x = cur.s(1, cur.s(2, x));
        } while (x != w);
        if (restored == kNoFlag)
          raise(Errc::PreconditionFailed, "no surviving face at the cone");
        ContractResult res = contract_with_mapping(cur, h);
        Flag post = res.map.face_of(res.old_to_new[restored]);
        CanonicalForm nf = canonical_form(res.map);
        inverse.push_back({MoveKind::FaceSubdivide, nf.face_rank(post)});
        cur = std::move(res.map);
        break;
      }
    }
  }
  if (canonical_key(cur) != script.end_key)
    raise(Errc::EndKeyMismatch, "replay does not reach the declared end");
  std::reverse(inverse.begin(), inverse.end());
  return {script.end_key, script.start_key, script.all_regular,
          std::move(inverse)};
}

}  // namespace flipkit
