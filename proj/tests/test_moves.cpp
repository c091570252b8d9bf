#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "flipkit/moves.hpp"
#include "support.hpp"

using namespace flipkit;

namespace {

TriangulationMap bipyramid5() {
  // double pyramid over a triangle; poles 0 and 4 have degree 3
  return TriangulationMap::from_face_triples(
      {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {4, 1, 2}, {4, 2, 3}, {4, 3, 1}});
}

Flag edge_between(const TriangulationMap& T, Flag u, Flag v) {
  for (Flag e : T.edges()) {
    auto ee = T.edge_endpoints(e);
    if ((ee[0] == u && ee[1] == v) || (ee[0] == v && ee[1] == u)) return e;
  }
  REQUIRE(false);
  return kNoFlag;
}

}  // namespace

TEST_CASE("flips preserve size and surface") {
  auto T = fktest::octahedron();
  for (Flag e : T.edges()) {
    CHECK(can_flip(T, e));
    CHECK(is_regular_flip(T, e));
    auto U = flip(T, e);
    CHECK(U.counts() == T.counts());
    CHECK(U.surface_class() == T.surface_class());
    CHECK(U.is_regular());
  }
}

TEST_CASE("flip keeps the edge orbit and is an involution up to iso") {
  auto T = fktest::octahedron();
  for (Flag e : T.edges()) {
    auto U = flip(T, e);
    CHECK(U.edge_of(e) == e);  // same four flags, new endpoints
    auto back = flip(U, e);
    CHECK(canonical_key(back) == canonical_key(T));
  }
}

TEST_CASE("flip changes only s1") {
  auto T = fktest::k7_torus();
  Flag e = T.edges()[5];
  auto U = flip(T, e);
  CHECK(U.involution(0) == T.involution(0));
  CHECK(U.involution(2) == T.involution(2));
  CHECK(U.involution(1) != T.involution(1));
}

TEST_CASE("tetrahedron flips leave the regular class") {
  auto T = fktest::tetrahedron();
  for (Flag e : T.edges()) {
    CHECK(can_flip(T, e));
    CHECK_FALSE(is_regular_flip(T, e));  // the diagonal already exists
    auto U = flip(T, e);
    CHECK_FALSE(U.is_regular());
    CHECK(U.surface_class() == SurfaceClass{2, true});
  }
}

TEST_CASE("complete graphs have no regular flips at all") {
  auto T = fktest::k7_torus();
  for (Flag e : T.edges()) {
    CHECK(can_flip(T, e));
    CHECK_FALSE(is_regular_flip(T, e));
  }
}

TEST_CASE("flipping a pillow edge makes a loop and flips back") {
  auto T = fktest::pillow();
  Flag e = T.edges()[0];
  auto U = flip(T, e);
  CHECK(U.surface_class() == SurfaceClass{2, true});
  bool has_loop = false;
  for (Flag d : U.edges()) {
    auto ee = U.edge_endpoints(d);
    if (ee[0] == ee[1]) has_loop = true;
  }
  CHECK(has_loop);
  CHECK(canonical_key(flip(U, e)) == canonical_key(T));
}

TEST_CASE("an edge inside a single face is blocked") {
  // one hexagon glued to itself along sides 0 and 1, the rest to a second
  // face: a projective plane with two vertices
  auto T = TriangulationMap::from_map_arrays(
      {1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10},
      {5, 2, 1, 4, 3, 0, 11, 8, 7, 10, 9, 6},
      {3, 2, 1, 0, 6, 7, 4, 5, 10, 11, 8, 9});
  CHECK(T.surface_class() == SurfaceClass{1, false});
  CHECK(T.counts() == Counts{2, 3, 2});
  Flag folded = T.edge_of(0);
  CHECK(T.face_of(0) == T.face_of(T.s(2, 0)));
  CHECK_FALSE(can_flip(T, folded));
  try {
    flip(T, folded);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FlipBlocked);
  }
}

TEST_CASE("degree-3 contraction undoes a cone") {
  auto T = bipyramid5();
  Flag pole = kNoFlag;
  for (Flag v : T.vertices())
    if (T.vertex_degree(v) == 3) pole = v;
  REQUIRE(pole != kNoFlag);
  auto link = T.link_of_vertex(pole);
  std::set<CanonicalKey> results;
  for (auto& step : link) {
    CHECK(can_contract(T, step.edge));
    auto K = contract(T, step.edge);
    CHECK(K.counts() == Counts{4, 6, 4});
    CHECK(K.is_regular());
    results.insert(canonical_key(K));
  }
  // spoke choice does not matter up to isomorphism
  CHECK(results.size() == 1);
  CHECK(*results.begin() == canonical_key(fktest::tetrahedron()));
}

TEST_CASE("contraction bookkeeping") {
  auto T = bipyramid5();
  Flag pole = kNoFlag;
  for (Flag v : T.vertices())
    if (T.vertex_degree(v) == 3) pole = v;
  Flag e = T.link_of_vertex(pole)[0].edge;
  auto r = contract_with_mapping(T, e);
  REQUIRE(r.old_to_new.size() == T.flag_count());
  std::uint32_t dead = 0;
  std::set<Flag> image;
  for (Flag x = 0; x < T.flag_count(); ++x) {
    if (r.old_to_new[x] == kNoFlag)
      ++dead;
    else
      image.insert(r.old_to_new[x]);
  }
  CHECK(dead == 12);
  CHECK(image.size() == r.map.flag_count());
}

TEST_CASE("contracting the tetrahedron leaves the regular class") {
  auto T = fktest::tetrahedron();
  for (Flag e : T.edges()) {
    CHECK_FALSE(can_contract(T, e));
    auto K = contract(T, e);  // structurally fine, just singular
    CHECK(K.counts() == Counts{3, 3, 2});
    CHECK_FALSE(K.is_regular());
  }
}

TEST_CASE("complete graphs are irreducible") {
  for (auto T : {fktest::k7_torus(), fktest::rp2_k6()}) {
    for (Flag e : T.edges()) CHECK_FALSE(can_contract(T, e));
    auto r = reduce_to_irreducible(T);
    CHECK(canonical_key(r.irreducible) == canonical_key(T));
    CHECK(r.contractions.moves.empty());
    CHECK(r.contractions.all_regular);
  }
}

TEST_CASE("link test agrees with the operational contraction test") {
  for (auto T : {fktest::tetrahedron(), fktest::octahedron(), bipyramid5(),
                 fktest::k7_torus(), fktest::rp2_k6()}) {
    for (Flag e : T.edges())
      CHECK(can_contract_link(T, e) == can_contract(T, e));
  }
}

TEST_CASE("face subdivision cones a face") {
  auto T = fktest::octahedron();
  for (Flag f : T.faces()) {
    auto U = face_subdivide(T, f);
    CHECK(U.counts() == Counts{7, 15, 10});
    CHECK(U.surface_class() == T.surface_class());
    CHECK(U.is_regular());
    // exactly one vertex of degree 3, adjacent to the old corners
    std::uint32_t deg3 = 0;
    for (Flag v : U.vertices()) deg3 += U.vertex_degree(v) == 3;
    CHECK(deg3 == 1);
  }
  // old flags keep their orbits: the subdivided face's flags are reused
  auto U = face_subdivide(T, T.faces()[0]);
  CHECK(U.flag_count() == T.flag_count() + 12);
  for (Flag e : T.edges()) CHECK(U.edge_of(e) == e);
}

TEST_CASE("subdivide then contract is the identity up to iso") {
  auto T = fktest::rp2_k6();
  auto U = face_subdivide(T, T.faces()[3]);
  Flag apex = kNoFlag;
  for (Flag v : U.vertices())
    if (U.vertex_degree(v) == 3) apex = v;
  REQUIRE(apex != kNoFlag);
  Flag spoke = U.link_of_vertex(apex)[0].edge;
  CHECK(can_contract(U, spoke));
  CHECK(canonical_key(contract(U, spoke)) == canonical_key(T));
}

TEST_CASE("barycentric subdivision sizes") {
  auto T = fktest::tetrahedron();
  auto B = barycentric(T);
  CHECK(B.counts() == Counts{14, 36, 24});
  CHECK(B.surface_class() == T.surface_class());
  CHECK(B.is_regular());
  auto P = barycentric(fktest::pillow());
  CHECK(P.counts() == Counts{8, 18, 12});
  CHECK(P.is_regular());  // barycty of any valid map is simplicial
  auto K = barycentric(fktest::k7_torus());
  CHECK(K.counts() == Counts{7 + 21 + 14, 6 * 21, 6 * 14});
  CHECK(K.surface_class() == SurfaceClass{0, true});
}

TEST_CASE("iterated subdivision is deterministic") {
  auto T = fktest::octahedron();
  auto A = iterated_subdivision(T, 4);
  auto B = iterated_subdivision(T, 4);
  CHECK(A.same_arrays(B));
  CHECK(A.counts().v == 10);
  CHECK(canonical_key(iterated_subdivision(T, 0)) == canonical_key(T));
}

TEST_CASE("sphere reduction reaches the tetrahedron") {
  auto T = fktest::octahedron();
  auto r = reduce_to_irreducible(T);
  CHECK(canonical_key(r.irreducible) == canonical_key(fktest::tetrahedron()));
  CHECK(r.contractions.moves.size() == 2);
  for (auto& m : r.contractions.moves) CHECK(m.kind == MoveKind::Contract);
  CHECK(r.contractions.all_regular);
  CHECK(verify_script(r.contractions, T));
  CHECK(canonical_key(apply_script(T, r.contractions)) ==
        canonical_key(r.irreducible));
}

TEST_CASE("script round trip with addressing") {
  auto T = fktest::octahedron();
  MoveScript s;
  s.start_key = canonical_key(T);
  auto cf0 = canonical_form(T);
  s.moves.push_back({MoveKind::Flip, cf0.edge_rank(T.edges()[2])});
  auto U1 = flip(T, T.edges()[2]);
  auto cf1 = canonical_form(U1);
  s.moves.push_back({MoveKind::FaceSubdivide, cf1.face_rank(U1.faces()[5])});
  auto U2 = face_subdivide(U1, U1.faces()[5]);
  s.end_key = canonical_key(U2);
  s.all_regular = true;
  CHECK(verify_script(s, T));
  CHECK(canonical_key(apply_script(T, s)) == s.end_key);
  // replay from an isomorphic copy of T reaches the same class
  auto D = decode_key(canonical_key(T));
  CHECK(canonical_key(apply_script(D, s)) == s.end_key);
}

TEST_CASE("script verdicts localize the fault") {
  auto T = fktest::octahedron();
  MoveScript s;
  s.start_key = canonical_key(T);
  s.end_key = s.start_key;
  s.all_regular = true;

  SUBCASE("wrong start key") {
    s.start_key = canonical_key(fktest::tetrahedron());
    auto verdict = verify_script_verdict(s, T);
    CHECK_FALSE(verdict.ok);
    CHECK(verdict.code == Errc::StartKeyMismatch);
  }
  SUBCASE("address out of range") {
    s.moves.push_back({MoveKind::Flip, 99});
    auto verdict = verify_script_verdict(s, T);
    CHECK_FALSE(verdict.ok);
    CHECK(verdict.code == Errc::AddressOutOfRange);
    CHECK(verdict.move_index == 0);
  }
  SUBCASE("irregular flip in an all-regular script") {
    auto K = fktest::k7_torus();
    MoveScript t;
    t.start_key = canonical_key(K);
    t.all_regular = true;
    t.moves.push_back({MoveKind::Flip, 0});
    t.end_key = canonical_key(flip(K, resolve_target(canonical_form(K),
                                                     t.moves[0])));
    auto verdict = verify_script_verdict(t, K);
    CHECK_FALSE(verdict.ok);
    CHECK(verdict.code == Errc::NonRegularFlipInRegularScript);
    t.all_regular = false;
    CHECK(verify_script(t, K));
  }
  SUBCASE("end key mismatch") {
    s.moves.push_back({MoveKind::Flip, 0});
    auto verdict = verify_script_verdict(s, T);
    CHECK_FALSE(verdict.ok);
    CHECK(verdict.code == Errc::EndKeyMismatch);
  }
}

TEST_CASE("reverse scripts undo") {
  auto T = fktest::octahedron();
  MoveScript s;
  s.start_key = canonical_key(T);
  auto cf0 = canonical_form(T);
  s.moves.push_back({MoveKind::FaceSubdivide, 2});
  auto U1 = face_subdivide(T, cf0.rank_to_rep[2][2]);
  auto cf1 = canonical_form(U1);
  s.moves.push_back({MoveKind::Flip, cf1.edge_rank(U1.edges()[0])});
  auto U2 = flip(U1, U1.edges()[0]);
  // contract the cone back out
  Flag apex = kNoFlag;
  for (Flag v : U2.vertices())
    if (U2.vertex_degree(v) == 3) apex = v;
  REQUIRE(apex != kNoFlag);
  Flag spoke = U2.link_of_vertex(apex)[0].edge;
  auto cf2 = canonical_form(U2);
  s.moves.push_back({MoveKind::Contract, cf2.edge_rank(spoke)});
  auto U3 = contract(U2, spoke);
  s.end_key = canonical_key(U3);
  CHECK(verify_script(s, T));

  auto r = reverse_script(s, T);
  CHECK(r.start_key == s.end_key);
  CHECK(r.end_key == s.start_key);
  REQUIRE(r.moves.size() == 3);
  CHECK(r.moves[0].kind == MoveKind::FaceSubdivide);
  CHECK(r.moves[2].kind == MoveKind::Contract);
  CHECK(verify_script(r, U3));
  CHECK(canonical_key(apply_script(U3, r)) == canonical_key(T));
}

TEST_CASE("move kind names round trip") {
  for (auto k : {MoveKind::Flip, MoveKind::Contract, MoveKind::FaceSubdivide})
    CHECK(move_kind_by_name(move_kind_name(k)) == k);
  CHECK_FALSE(move_kind_by_name("warp").has_value());
}
