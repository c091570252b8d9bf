// Kernel hot paths at a few sizes. Run with --benchmark_filter=... to slice.
#include <benchmark/benchmark.h>

#include "flipkit/canonical.hpp"
#include "flipkit/gadgets.hpp"
#include "flipkit/moves.hpp"
#include "flipkit/pipeline.hpp"
#include "flipkit/search.hpp"
#include "flipkit/seeds.hpp"

using namespace flipkit;

namespace {

TriangulationMap octahedron() {
  return TriangulationMap::from_face_triples({{0, 1, 2},
                                              {0, 2, 3},
                                              {0, 3, 4},
                                              {0, 4, 1},
                                              {5, 2, 1},
                                              {5, 3, 2},
                                              {5, 4, 3},
                                              {5, 1, 4}});
}

// Subjects keyed by flag count: 48, 288, 1728 flags.
TriangulationMap subject(int level) {
  TriangulationMap T = octahedron();
  for (int i = 0; i < level; ++i) T = barycentric(T);
  return T;
}

void BM_CanonicalKey(benchmark::State& state) {
  TriangulationMap T = subject(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(T));
  state.SetLabel(std::to_string(T.flag_count()) + " flags");
}
BENCHMARK(BM_CanonicalKey)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMicrosecond);

void BM_Flip(benchmark::State& state) {
  TriangulationMap T = subject(int(state.range(0)));
  Flag e = T.edges().front();
  for (auto _ : state) benchmark::DoNotOptimize(flip(T, e));
}
BENCHMARK(BM_Flip)->Arg(0)->Arg(2)->Unit(benchmark::kMicrosecond);

void BM_FaceSubdivide(benchmark::State& state) {
  TriangulationMap T = subject(int(state.range(0)));
  Flag f = T.faces().front();
  for (auto _ : state) benchmark::DoNotOptimize(face_subdivide(T, f));
}
BENCHMARK(BM_FaceSubdivide)->Arg(0)->Arg(2)->Unit(benchmark::kMicrosecond);

void BM_Contract(benchmark::State& state) {
  TriangulationMap T = subject(1);  // barycentric maps have degree-3 corners
  Flag e = kNoFlag;
  for (Flag c : T.edges())
    if (can_contract(T, c)) {
      e = c;
      break;
    }
  for (auto _ : state) benchmark::DoNotOptimize(contract(T, e));
}
BENCHMARK(BM_Contract)->Unit(benchmark::kMicrosecond);

void BM_Barycentric(benchmark::State& state) {
  TriangulationMap T = subject(int(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(barycentric(T));
}
BENCHMARK(BM_Barycentric)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_EnumerateSphere(benchmark::State& state) {
  SurfaceClass sphere{2, true};
  auto v = std::uint32_t(state.range(0));
  for (auto _ : state) {
    FlipGraphStore store = enumerate_triangulations(sphere, v, SearchBudget{});
    state.SetLabel(std::to_string(store.nodes.size()) + " classes");
  }
}
BENCHMARK(BM_EnumerateSphere)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_FindPathSphere6(benchmark::State& state) {
  TriangulationMap a = octahedron();
  TriangulationMap b = iterated_subdivision(
      TriangulationMap::from_face_triples({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}),
      2);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        find_path(a, b, FlipMode::RegularFlips, SearchBudget{}));
}
BENCHMARK(BM_FindPathSphere6)->Unit(benchmark::kMillisecond);

void BM_BaryBySubdivisions(benchmark::State& state) {
  TriangulationMap T = subject(0);
  for (auto _ : state) benchmark::DoNotOptimize(bary_by_subdivisions(T));
}
BENCHMARK(BM_BaryBySubdivisions)->Unit(benchmark::kMillisecond);

void BM_LiftFlipToBary2(benchmark::State& state) {
  TriangulationMap T = octahedron();
  Flag e = T.edges().front();
  for (auto _ : state) benchmark::DoNotOptimize(lift_flip_to_bary2(T, e));
}
BENCHMARK(BM_LiftFlipToBary2)->Unit(benchmark::kMillisecond);

void BM_VerifyCertificate(benchmark::State& state) {
  TriangulationMap octa = octahedron();
  ReduceResult red = reduce_to_irreducible(octa);
  EquivalenceCertificate cert =
      negami_lift(octa, red.irreducible, red.contractions);
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(cert, octa));
}
BENCHMARK(BM_VerifyCertificate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
