#include "flipkit/seeds.hpp"

#include <cstdlib>
#include <filesystem>

#include "flipkit/io.hpp"
#include "flipkit/moves.hpp"

namespace flipkit {

TriangulationMap seed_sphere3() {
  // doubled triangle: two faces glued along all three sides
  std::vector<Flag> s0{1, 0, 3, 2, 5, 4, 7, 6, 9, 8, 11, 10};
  std::vector<Flag> s1{5, 2, 1, 4, 3, 0, 11, 8, 7, 10, 9, 6};
  std::vector<Flag> s2{6, 7, 8, 9, 10, 11, 0, 1, 2, 3, 4, 5};
  return TriangulationMap::from_map_arrays(s0, s1, s2);
}

TriangulationMap from_polygon_scheme(
    const std::vector<std::pair<std::uint32_t, bool>>& pairing) {
  const std::uint32_t N = static_cast<std::uint32_t>(pairing.size());
  if (N < 4 || N % 2 != 0)
    raise(Errc::PreconditionFailed, "polygon needs an even side count >= 4");
  for (std::uint32_t i = 0; i < N; ++i) {
    auto [j, h2t] = pairing[i];
    if (j >= N || j == i || pairing[j].first != i || pairing[j].second != h2t)
      raise(Errc::PreconditionFailed, "side pairing is not a matching");
  }
  // fan: face t = (P0, P_{t+1}, P_{t+2}) on flags 6t..6t+5; the hexagon
  // layout matches from_face_triples (side {0,1} P0-P_{t+1}, side {2,3}
  // P_{t+1}-P_{t+2}, side {4,5} P_{t+2}-P0; s1 closes corners (1,2),(3,4),(5,0))
  const std::uint32_t F = N - 2, n = 6 * F;
  std::vector<Flag> s0(n), s1(n), s2(n, kNoFlag);
  for (std::uint32_t t = 0; t < F; ++t) {
    const std::uint32_t b = 6 * t;
    s0[b + 0] = b + 1; s0[b + 1] = b + 0;
    s0[b + 2] = b + 3; s0[b + 3] = b + 2;
    s0[b + 4] = b + 5; s0[b + 5] = b + 4;
    s1[b + 1] = b + 2; s1[b + 2] = b + 1;
    s1[b + 3] = b + 4; s1[b + 4] = b + 3;
    s1[b + 5] = b + 0; s1[b + 0] = b + 5;
  }
  // internal diagonals P0-P_{t+2}: side {4,5} of face t meets side {0,1} of
  // face t+1, matching flags at equal polygon corners
  for (std::uint32_t t = 0; t + 1 < F; ++t) {
    s2[6 * t + 4] = 6 * (t + 1) + 1; s2[6 * (t + 1) + 1] = 6 * t + 4;
    s2[6 * t + 5] = 6 * (t + 1) + 0; s2[6 * (t + 1) + 0] = 6 * t + 5;
  }
  // boundary side i runs P_i -> P_{i+1}; (tail flag, head flag):
  auto side_flags = [&](std::uint32_t i) -> std::pair<Flag, Flag> {
    if (i == 0) return {0, 1};
    if (i <= N - 2) return {6 * (i - 1) + 2, 6 * (i - 1) + 3};
    return {6 * (N - 3) + 4, 6 * (N - 3) + 5};
  };
  for (std::uint32_t i = 0; i < N; ++i) {
    auto [j, h2t] = pairing[i];
    if (j < i) continue;
    auto [ui, wi] = side_flags(i);
    auto [uj, wj] = side_flags(j);
    if (h2t) {
      s2[ui] = wj; s2[wj] = ui;
      s2[wi] = uj; s2[uj] = wi;
    } else {
      s2[ui] = uj; s2[uj] = ui;
      s2[wi] = wj; s2[wj] = wi;
    }
  }
  return TriangulationMap::from_map_arrays(s0, s1, s2);
}

TriangulationMap seed_torus1() {
  return from_polygon_scheme({{2, true}, {3, true}, {0, true}, {1, true}});
}

TriangulationMap seed_klein1() {
  return from_polygon_scheme({{2, true}, {3, false}, {0, true}, {1, false}});
}

TriangulationMap seed_rp2_2() {
  return from_polygon_scheme({{2, false}, {3, false}, {0, false}, {1, false}});
}

TriangulationMap seed_genus2_1() {
  return from_polygon_scheme({{2, true}, {3, true}, {0, true}, {1, true},
                              {6, true}, {7, true}, {4, true}, {5, true}});
}

namespace {

std::optional<TriangulationMap> builtin_seed(const SurfaceClass& sc) {
  if (sc == SurfaceClass{2, true}) return seed_sphere3();
  if (sc == SurfaceClass{0, true}) return seed_torus1();
  if (sc == SurfaceClass{0, false}) return seed_klein1();
  if (sc == SurfaceClass{1, false}) return seed_rp2_2();
  if (sc == SurfaceClass{-2, true}) return seed_genus2_1();
  return std::nullopt;
}

// FLIPKIT_SEED_DIR/<name>.json overrides the table when present; a present
// but invalid file is an error, a missing file falls back silently.
std::optional<TriangulationMap> base_seed(const SurfaceClass& sc) {
  if (const char* dir = std::getenv("FLIPKIT_SEED_DIR")) {
    std::filesystem::path p =
        std::filesystem::path(dir) / (surface_name(sc) + ".json");
    if (std::filesystem::exists(p)) {
      TriangulationMap T = load_map_file(p.string());
      if (!(T.surface_class() == sc))
        raise(Errc::BadFormat, "seed file " + p.string() +
                                   " triangulates " +
                                   surface_name(T.surface_class()) + ", not " +
                                   surface_name(sc));
      return T;
    }
  }
  return builtin_seed(sc);
}

}  // namespace

TriangulationMap standard_seed(const SurfaceClass& surface, std::uint32_t v) {
  auto base = base_seed(surface);
  if (!base)
    raise(Errc::NoSeedAvailable, "no seed for " + surface_name(surface));
  std::uint32_t v0 = base->counts().v;
  if (v < v0)
    raise(Errc::NoSeedAvailable, surface_name(surface) + " seeds start at v=" +
                                     std::to_string(v0));
  return iterated_subdivision(*base, v - v0);
}

std::optional<std::uint32_t> seed_min_vertices(const SurfaceClass& surface) {
  auto base = base_seed(surface);
  if (!base) return std::nullopt;
  return base->counts().v;
}

}  // namespace flipkit
