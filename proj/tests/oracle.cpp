#include "oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "flipkit/canonical.hpp"

namespace fkoracle {

using flipkit::CanonicalKey;
using flipkit::Flag;
using flipkit::SurfaceClass;
using flipkit::TriangulationMap;

namespace {

using Tri = std::array<std::uint32_t, 3>;

struct FacetSearch {
  std::uint32_t v, f_target;
  SurfaceClass want;
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> edge_use;
  std::vector<Tri> faces;
  std::set<Tri> used;
  std::set<CanonicalKey> seen;
  std::vector<TriangulationMap> out;

  static std::pair<std::uint32_t, std::uint32_t> edge(std::uint32_t a,
                                                      std::uint32_t b) {
    return {std::min(a, b), std::max(a, b)};
  }

  void complete() {
    if (faces.size() != f_target) return;
    std::vector<bool> hit(v, false);
    for (auto& t : faces)
      for (auto x : t) hit[x] = true;
    if (!std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) return;
    try {
      auto T = TriangulationMap::from_face_triples(faces);
      if (!(T.surface_class() == want)) return;
      if (seen.insert(flipkit::canonical_key(T)).second) out.push_back(T);
    } catch (const flipkit::Error&) {
      // pinched or disconnected; not a closed-surface triangulation
    }
  }

  void dfs() {
    std::pair<std::uint32_t, std::uint32_t> open{0, 0};
    bool found = false;
    for (auto& [e, n] : edge_use)
      if (n == 1) {
        open = e;
        found = true;
        break;
      }
    if (!found) {
      complete();
      return;
    }
    if (faces.size() >= f_target) return;
    auto [a, b] = open;
    for (std::uint32_t c = 0; c < v; ++c) {
      if (c == a || c == b) continue;
      Tri t{a, b, c};
      std::sort(t.begin(), t.end());
      if (used.count(t)) continue;
      auto e1 = edge(a, c), e2 = edge(b, c);
      if (edge_use[e1] >= 2 || edge_use[e2] >= 2) continue;
      faces.push_back(t);
      used.insert(t);
      ++edge_use[open];
      ++edge_use[e1];
      ++edge_use[e2];
      dfs();
      --edge_use[open];
      --edge_use[e1];
      --edge_use[e2];
      used.erase(t);
      faces.pop_back();
    }
  }
};

}  // namespace

std::vector<TriangulationMap> simplicial_classes(SurfaceClass surface,
                                                 std::uint32_t v) {
  long long f = 2 * (static_cast<long long>(v) - surface.euler_characteristic);
  if (f <= 3 || v < 3) return {};
  FacetSearch fs;
  fs.v = v;
  fs.f_target = static_cast<std::uint32_t>(f);
  fs.want = surface;
  // every class has a labelling whose first face is {0,1,2}
  fs.faces.push_back({0, 1, 2});
  fs.used.insert({0, 1, 2});
  fs.edge_use[{0, 1}] = fs.edge_use[{0, 2}] = fs.edge_use[{1, 2}] = 1;
  fs.dfs();
  return std::move(fs.out);
}

namespace {

struct GlueSearch {
  std::uint32_t F;
  SurfaceClass want;
  std::vector<Flag> s0, s1, s2;
  std::uint32_t opened = 1;
  std::set<CanonicalKey> seen;
  std::vector<TriangulationMap> out;

  void complete() {
    if (opened != F) return;
    try {
      auto T = TriangulationMap::from_map_arrays(s0, s1, s2);
      if (!(T.surface_class() == want)) return;
      if (seen.insert(flipkit::canonical_key(T)).second) out.push_back(T);
    } catch (const flipkit::Error&) {
      // disconnected gluing
    }
  }

  void tie(Flag x, Flag y, Flag t) {  // side at x to side at y, twist t
    s2[x] = y + t;
    s2[x + 1] = y + 1 - t;
    s2[y + t] = x;
    s2[y + 1 - t] = x + 1;
  }

  void untie(Flag x) {
    s2[s2[x]] = flipkit::kNoFlag;
    s2[s2[x + 1]] = flipkit::kNoFlag;
    s2[x] = s2[x + 1] = flipkit::kNoFlag;
  }

  void dfs() {
    Flag x = flipkit::kNoFlag;
    for (Flag i = 0; i < 6 * opened; ++i)
      if (s2[i] == flipkit::kNoFlag) {
        x = i;
        break;
      }
    if (x == flipkit::kNoFlag) {
      complete();
      return;
    }
    for (Flag y = x + 2; y < 6 * opened; y += 2)
      if (s2[y] == flipkit::kNoFlag && (y & 1) == 0 && y / 2 != x / 2)
        for (Flag t = 0; t < 2; ++t) {
          tie(x, y, t);
          dfs();
          untie(x);
        }
    if (opened < F) {
      Flag y = 6 * opened;
      ++opened;
      tie(x, y, 0);
      dfs();
      untie(x);
      --opened;
    }
  }
};

}  // namespace

std::vector<TriangulationMap> glued_classes(SurfaceClass surface,
                                            std::uint32_t faces) {
  if (faces < 2 || faces % 2) return {};
  GlueSearch gs;
  gs.F = faces;
  gs.want = surface;
  std::uint32_t n = 6 * faces;
  gs.s0.resize(n);
  gs.s1.resize(n);
  gs.s2.assign(n, flipkit::kNoFlag);
  for (std::uint32_t g = 0; g < faces; ++g) {
    std::uint32_t b = 6 * g;
    for (std::uint32_t k = 0; k < 3; ++k) {
      gs.s0[b + 2 * k] = b + 2 * k + 1;
      gs.s0[b + 2 * k + 1] = b + 2 * k;
    }
    static constexpr std::uint32_t s1of[6] = {5, 2, 1, 4, 3, 0};
    for (std::uint32_t j = 0; j < 6; ++j) gs.s1[b + j] = b + s1of[j];
  }
  gs.dfs();
  return std::move(gs.out);
}

}  // namespace fkoracle
