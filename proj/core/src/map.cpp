#include "flipkit/map.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <utility>

namespace flipkit {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotInvolution: return "NotInvolution";
    case Errc::FixedPoint: return "FixedPoint";
    case Errc::EdgeOrbitNot4: return "EdgeOrbitNot4";
    case Errc::FaceOrbitNot6: return "FaceOrbitNot6";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NonPseudomanifold: return "NonPseudomanifold";
    case Errc::RepeatedVertexInFace: return "RepeatedVertexInFace";
    case Errc::NotRegular: return "NotRegular";
    case Errc::InvalidHandle: return "InvalidHandle";
    case Errc::FlipBlocked: return "FlipBlocked";
    case Errc::ContractBlocked: return "ContractBlocked";
    case Errc::AddressOutOfRange: return "AddressOutOfRange";
    case Errc::StartKeyMismatch: return "StartKeyMismatch";
    case Errc::EndKeyMismatch: return "EndKeyMismatch";
    case Errc::NonRegularFlipInRegularScript: return "NonRegularFlipInRegularScript";
    case Errc::GadgetFailed: return "GadgetFailed";
    case Errc::LiftNotFound: return "LiftNotFound";
    case Errc::NotConnected: return "NotConnected";
    case Errc::Exhausted: return "Exhausted";
    case Errc::NoSeedAvailable: return "NoSeedAvailable";
    case Errc::BadFormat: return "BadFormat";
    case Errc::PreconditionFailed: return "PreconditionFailed";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& msg)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
      code_(code) {}

void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

std::string surface_name(const SurfaceClass& sc) {
  if (sc.orientable) {
    if (sc.euler_characteristic == 2) return "sphere";
    if (sc.euler_characteristic == 0) return "torus";
    if (sc.euler_characteristic == -2) return "genus2";
  } else {
    if (sc.euler_characteristic == 1) return "rp2";
    if (sc.euler_characteristic == 0) return "klein";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "chi=%d,%s", sc.euler_characteristic,
                sc.orientable ? "orientable" : "nonorientable");
  return buf;
}

std::optional<SurfaceClass> surface_by_name(const std::string& name) {
  if (name == "sphere") return SurfaceClass{2, true};
  if (name == "torus") return SurfaceClass{0, true};
  if (name == "klein") return SurfaceClass{0, false};
  if (name == "rp2") return SurfaceClass{1, false};
  if (name == "genus2") return SurfaceClass{-2, true};
  return std::nullopt;
}

namespace {

void check_involutions(const std::array<std::vector<Flag>, 3>& s,
                       std::uint32_t n) {
  for (unsigned i = 0; i < 3; ++i) {
    if (s[i].size() != n)
      raise(Errc::NotInvolution, "involution arrays differ in length");
    for (std::uint32_t x = 0; x < n; ++x) {
      Flag y = s[i][x];
      if (y >= n) raise(Errc::NotInvolution, "value out of range in s" +
                                                 std::to_string(i));
      if (y == x) raise(Errc::FixedPoint, "s" + std::to_string(i) +
                                              " fixes flag " + std::to_string(x));
      if (s[i][y] != x)
        raise(Errc::NotInvolution, "s" + std::to_string(i) +
                                       " is not an involution at flag " +
                                       std::to_string(x));
    }
  }
}

}  // namespace

void TriangulationMap::build_orbits() {
  const std::uint32_t n = n_;
  // generator pairs per orbit kind: kind k uses the two involutions != k
  static constexpr unsigned gens[3][2] = {{1, 2}, {0, 2}, {0, 1}};
  std::vector<Flag> stack;
  for (unsigned k = 0; k < 3; ++k) {
    orbit_[k].assign(n, kNoFlag);
    reps_[k].clear();
    for (std::uint32_t x = 0; x < n; ++x) {
      if (orbit_[k][x] != kNoFlag) continue;
      // x is minimal in its orbit because flags are scanned in order
      reps_[k].push_back(x);
      orbit_[k][x] = x;
      stack.assign(1, x);
      while (!stack.empty()) {
        Flag y = stack.back();
        stack.pop_back();
        for (unsigned gi : gens[k]) {
          Flag z = s_[gi][y];
          if (orbit_[k][z] == kNoFlag) {
            orbit_[k][z] = x;
            stack.push_back(z);
          }
        }
      }
    }
  }
  chi_ = static_cast<int>(reps_[0].size()) - static_cast<int>(reps_[1].size()) +
         static_cast<int>(reps_[2].size());
  // orientable iff flags admit a 2-colouring where every s_i swaps colours
  std::vector<signed char> col(n, -1);
  orientable_ = true;
  col[0] = 0;
  stack.assign(1, 0);
  while (!stack.empty()) {
    Flag y = stack.back();
    stack.pop_back();
    for (unsigned i = 0; i < 3; ++i) {
      Flag z = s_[i][y];
      if (col[z] < 0) {
        col[z] = static_cast<signed char>(1 - col[y]);
        stack.push_back(z);
      } else if (col[z] == col[y]) {
        orientable_ = false;
      }
    }
  }
}

TriangulationMap TriangulationMap::from_map_arrays(const std::vector<Flag>& s0,
                                                   const std::vector<Flag>& s1,
                                                   const std::vector<Flag>& s2) {
  TriangulationMap T;
  T.s_ = {s0, s1, s2};
  if (s0.empty()) raise(Errc::Disconnected, "empty flag set");
  T.n_ = static_cast<std::uint32_t>(s0.size());
  check_involutions(T.s_, T.n_);
  // edge axiom: s0 and s2 commute and their product is fixed-point-free
  for (std::uint32_t x = 0; x < T.n_; ++x) {
    if (s0[s2[x]] != s2[s0[x]])
      raise(Errc::EdgeOrbitNot4, "s0 and s2 do not commute at flag " +
                                     std::to_string(x));
    if (s0[s2[x]] == x)
      raise(Errc::EdgeOrbitNot4, "s0*s2 fixes flag " + std::to_string(x));
  }
  T.build_orbits();
  // orbit sizes: edges 4, faces 6
  {
    std::vector<std::uint32_t> size(T.n_, 0);
    for (std::uint32_t x = 0; x < T.n_; ++x) ++size[T.orbit_[1][x]];
    for (Flag r : T.reps_[1])
      if (size[r] != 4)
        raise(Errc::EdgeOrbitNot4, "edge orbit of flag " + std::to_string(r) +
                                       " has size " + std::to_string(size[r]));
    size.assign(T.n_, 0);
    for (std::uint32_t x = 0; x < T.n_; ++x) ++size[T.orbit_[2][x]];
    for (Flag r : T.reps_[2])
      if (size[r] != 6)
        raise(Errc::FaceOrbitNot6, "face orbit of flag " + std::to_string(r) +
                                       " has size " + std::to_string(size[r]));
  }
  // connectivity under <s0,s1,s2>
  {
    std::vector<char> seen(T.n_, 0);
    std::vector<Flag> stack{0};
    seen[0] = 1;
    std::uint32_t count = 1;
    while (!stack.empty()) {
      Flag y = stack.back();
      stack.pop_back();
      for (unsigned i = 0; i < 3; ++i) {
        Flag z = T.s_[i][y];
        if (!seen[z]) {
          seen[z] = 1;
          ++count;
          stack.push_back(z);
        }
      }
    }
    if (count != T.n_)
      raise(Errc::Disconnected, "flag set splits into several components");
  }
  return T;
}

TriangulationMap make_map_unchecked(std::vector<Flag> s0, std::vector<Flag> s1,
                                    std::vector<Flag> s2) {
  TriangulationMap T;
  T.n_ = static_cast<std::uint32_t>(s0.size());
  T.s_ = {std::move(s0), std::move(s1), std::move(s2)};
  T.build_orbits();
  return T;
}

TriangulationMap TriangulationMap::from_face_triples(
    const std::vector<std::array<std::uint32_t, 3>>& faces) {
  const std::uint32_t F = static_cast<std::uint32_t>(faces.size());
  if (F == 0) raise(Errc::Disconnected, "no faces");
  for (const auto& f : faces)
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
      raise(Errc::RepeatedVertexInFace,
            "face has a repeated vertex label");
  // face g occupies flags 6g..6g+5; sides are s0-pairs:
  //   side 0 = {6g,6g+1}   joining corners a,b
  //   side 1 = {6g+2,6g+3} joining corners b,c
  //   side 2 = {6g+4,6g+5} joining corners c,a
  // flag at the lower-numbered position of a side sits at the side's first
  // corner. s1 pairs (1,2),(3,4),(5,0) close the hexagon.
  const std::uint32_t n = 6 * F;
  std::vector<Flag> s0(n), s1(n), s2(n, kNoFlag);
  for (std::uint32_t g = 0; g < F; ++g) {
    const std::uint32_t b = 6 * g;
    s0[b + 0] = b + 1; s0[b + 1] = b + 0;
    s0[b + 2] = b + 3; s0[b + 3] = b + 2;
    s0[b + 4] = b + 5; s0[b + 5] = b + 4;
    s1[b + 1] = b + 2; s1[b + 2] = b + 1;
    s1[b + 3] = b + 4; s1[b + 4] = b + 3;
    s1[b + 5] = b + 0; s1[b + 0] = b + 5;
  }
  // collect the two occurrences of each unordered vertex pair
  struct Side {
    std::uint32_t lo_flag;  // flag at the smaller vertex label
    std::uint32_t hi_flag;
  };
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Side>> pairs;
  for (std::uint32_t g = 0; g < F; ++g) {
    const auto& fc = faces[g];
    const std::uint32_t corner[3][2] = {{fc[0], fc[1]}, {fc[1], fc[2]}, {fc[2], fc[0]}};
    for (unsigned sde = 0; sde < 3; ++sde) {
      std::uint32_t u = corner[sde][0], v = corner[sde][1];
      std::uint32_t fu = 6 * g + 2 * sde, fv = 6 * g + 2 * sde + 1;
      if (u > v) { std::swap(u, v); std::swap(fu, fv); }
      pairs[{u, v}].push_back({fu, fv});
    }
  }
  for (const auto& [pr, occ] : pairs) {
    if (occ.size() != 2)
      raise(Errc::NonPseudomanifold,
            "vertex pair {" + std::to_string(pr.first) + "," +
                std::to_string(pr.second) + "} occurs in " +
                std::to_string(occ.size()) + " face sides (needs 2)");
    s2[occ[0].lo_flag] = occ[1].lo_flag;
    s2[occ[1].lo_flag] = occ[0].lo_flag;
    s2[occ[0].hi_flag] = occ[1].hi_flag;
    s2[occ[1].hi_flag] = occ[0].hi_flag;
  }
  TriangulationMap T = from_map_arrays(s0, s1, s2);
  // the complex is a closed surface iff every vertex label yields one orbit
  std::set<std::uint32_t> labels;
  for (const auto& f : faces) labels.insert(f.begin(), f.end());
  if (T.counts().v != labels.size())
    raise(Errc::NonPseudomanifold,
          "a vertex link is not a single cycle (pinched vertex)");
  if (!T.is_regular())
    raise(Errc::NotRegular, "facet list encodes a singular triangulation");
  return T;
}

Counts TriangulationMap::counts() const {
  return {static_cast<std::uint32_t>(reps_[0].size()),
          static_cast<std::uint32_t>(reps_[1].size()),
          static_cast<std::uint32_t>(reps_[2].size())};
}

SurfaceClass TriangulationMap::surface_class() const {
  return {chi_, orientable_};
}

bool TriangulationMap::is_regular() const {
  if (reps_[2].size() <= 3) return false;
  std::set<std::pair<Flag, Flag>> seen;
  for (Flag e : reps_[1]) {
    Flag a = orbit_[0][e], b = orbit_[0][s_[0][e]];
    if (a == b) return false;  // loop
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) return false;  // multiple edge
  }
  return true;
}

std::uint32_t TriangulationMap::vertex_degree(Flag v) const {
  if (v >= n_ || orbit_[0][v] != v)
    raise(Errc::InvalidHandle, "not a vertex handle: " + std::to_string(v));
  std::uint32_t count = 0;
  Flag x = v;
  do {
    ++count;
    x = s_[1][s_[2][x]];
  } while (x != v);
  return count;
}

std::vector<TriangulationMap::LinkStep> TriangulationMap::link_of_vertex(
    Flag v) const {
  if (v >= n_ || orbit_[0][v] != v)
    raise(Errc::InvalidHandle, "not a vertex handle: " + std::to_string(v));
  std::vector<LinkStep> link;
  Flag x = v;
  do {
    link.push_back({orbit_[0][s_[0][x]], orbit_[1][x]});
    x = s_[1][s_[2][x]];
  } while (x != v);
  return link;
}

std::array<Flag, 3> TriangulationMap::face_corners(Flag f) const {
  if (f >= n_ || orbit_[2][f] != f)
    raise(Errc::InvalidHandle, "not a face handle: " + std::to_string(f));
  Flag x1 = f, x2 = s_[0][x1], x3 = s_[1][x2];
  return {orbit_[0][x1], orbit_[0][x2], orbit_[0][s_[0][x3]]};
}

std::array<Flag, 2> TriangulationMap::edge_endpoints(Flag e) const {
  if (e >= n_ || orbit_[1][e] != e)
    raise(Errc::InvalidHandle, "not an edge handle: " + std::to_string(e));
  return {orbit_[0][e], orbit_[0][s_[0][e]]};
}

std::vector<std::array<std::uint32_t, 3>> TriangulationMap::to_face_triples()
    const {
  if (!is_regular())
    raise(Errc::NotRegular, "facet export needs a regular triangulation");
  std::vector<std::uint32_t> vertex_id(n_, 0);
  for (std::uint32_t i = 0; i < reps_[0].size(); ++i)
    vertex_id[reps_[0][i]] = i;
  std::vector<std::array<std::uint32_t, 3>> out;
  out.reserve(reps_[2].size());
  for (Flag f : reps_[2]) {
    auto c = face_corners(f);
    out.push_back({vertex_id[c[0]], vertex_id[c[1]], vertex_id[c[2]]});
  }
  return out;
}

bool TriangulationMap::same_arrays(const TriangulationMap& o) const {
  return n_ == o.n_ && s_[0] == o.s_[0] && s_[1] == o.s_[1] && s_[2] == o.s_[2];
}

}  // namespace flipkit
