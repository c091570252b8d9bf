#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flipkit/gadgets.hpp"
#include "flipkit/moves.hpp"
#include "support.hpp"

using namespace flipkit;

namespace {

std::pair<std::uint32_t, std::uint32_t> move_mix(const MoveScript& s) {
  std::uint32_t flips = 0, subs = 0;
  for (auto& m : s.moves) {
    if (m.kind == MoveKind::Flip) ++flips;
    if (m.kind == MoveKind::FaceSubdivide) ++subs;
  }
  return {flips, subs};
}

}  // namespace

TEST_CASE("subdivision transfer walks the cone between faces") {
  for (auto T : {fktest::tetrahedron(), fktest::octahedron(),
                 fktest::rp2_k6()}) {
    auto faces = T.faces();
    Flag d = faces.front();
    for (Flag d2 : {faces[1], faces.back()}) {
      auto s = subdivision_transfer(T, d, d2);
      CHECK(s.start_key == canonical_key(face_subdivide(T, d)));
      CHECK(s.end_key == canonical_key(face_subdivide(T, d2)));
      CHECK(s.all_regular);
      auto [flips, subs] = move_mix(s);
      CHECK(flips == s.moves.size());
      CHECK(subs == 0);
      CHECK(s.moves.size() % 2 == 0);  // two flips per dual step
      CHECK(verify_script(s, face_subdivide(T, d)));
    }
    // staying put is the empty script
    auto none = subdivision_transfer(T, d, d);
    CHECK(none.moves.empty());
    CHECK(none.start_key == none.end_key);
  }
}

TEST_CASE("transfer rejects bad handles") {
  auto T = fktest::tetrahedron();
  CHECK_THROWS_AS(subdivision_transfer(T, 1, T.faces()[0]), Error);
  CHECK_THROWS_AS(subdivision_transfer(fktest::pillow(), 0, 6), Error);
}

TEST_CASE("a flip lifts to the subdivision") {
  auto T = fktest::octahedron();
  Flag e = T.edges()[0];
  auto B = barycentric(T);
  auto s = lift_flip_to_bary(T, e);
  CHECK(s.start_key == canonical_key(B));
  CHECK(s.end_key == canonical_key(barycentric(flip(T, e))));
  auto [flips, subs] = move_mix(s);
  CHECK(flips == s.moves.size());
  CHECK(verify_script(s, B));
}

TEST_CASE("lifting an irregular flip still works on the subdivision") {
  // flipping a tetrahedron edge leaves the regular class, but the
  // subdivisions stay regular and the lift connects them
  auto T = fktest::tetrahedron();
  Flag e = T.edges()[2];
  REQUIRE_FALSE(is_regular_flip(T, e));
  auto s = lift_flip_to_bary(T, e);
  CHECK(s.end_key == canonical_key(barycentric(flip(T, e))));
  CHECK(verify_script(s, barycentric(T)));
}

TEST_CASE("lift works from a singular start") {
  auto P = fktest::pillow();
  Flag e = P.edges()[0];
  auto s = lift_flip_to_bary(P, e);
  CHECK(s.start_key == canonical_key(barycentric(P)));
  CHECK(s.end_key == canonical_key(barycentric(flip(P, e))));
  CHECK(verify_script(s, barycentric(P)));
}

TEST_CASE("the double subdivision lift is all regular") {
  auto T = fktest::tetrahedron();
  Flag e = T.edges()[0];
  auto B2 = barycentric(barycentric(T));
  auto s = lift_flip_to_bary2(T, e);
  CHECK(s.start_key == canonical_key(B2));
  CHECK(s.end_key == canonical_key(barycentric(barycentric(flip(T, e)))));
  CHECK(s.all_regular);
  CHECK(verify_script(s, B2));
}

TEST_CASE("blocked flips cannot be lifted") {
  auto T = TriangulationMap::from_map_arrays(
      {1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10},
      {5, 2, 1, 4, 3, 0, 11, 8, 7, 10, 9, 6},
      {3, 2, 1, 0, 6, 7, 4, 5, 10, 11, 8, 9});
  Flag folded = T.edge_of(0);
  REQUIRE_FALSE(can_flip(T, folded));
  CHECK_THROWS_AS(lift_flip_to_bary(T, folded), Error);
}

TEST_CASE("barycentric subdivision by elementary moves") {
  for (auto T : {fktest::tetrahedron(), fktest::octahedron()}) {
    auto c = T.counts();
    std::uint32_t span =
        c.v - static_cast<std::uint32_t>(T.surface_class().euler_characteristic);
    auto s = bary_by_subdivisions(T);
    CHECK(s.start_key == canonical_key(T));
    CHECK(s.end_key == canonical_key(barycentric(barycentric(T))));
    CHECK(s.all_regular);
    auto [flips, subs] = move_mix(s);
    CHECK(subs == 35 * span);
    CHECK(flips == 21 * span);
    CHECK(verify_script(s, T));
  }
}

TEST_CASE("bary by subdivisions needs a regular start") {
  CHECK_THROWS_AS(bary_by_subdivisions(fktest::pillow()), Error);
}
