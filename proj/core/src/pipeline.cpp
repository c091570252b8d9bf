#include "flipkit/pipeline.hpp"

#include <algorithm>
#include <optional>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "flipkit/canonical.hpp"
#include "flipkit/gadgets.hpp"

namespace flipkit {

Thresholds thresholds_for_chi(int chi) {
  Thresholds t;
  t.chi = chi;
  t.N = 9450 - 6020LL * chi;
  t.irreducible_bound = 270 - 171LL * chi;
  return t;
}

Thresholds thresholds(const SurfaceClass& surface) {
  return thresholds_for_chi(surface.euler_characteristic);
}

const char* certify_status_name(CertifyStatus s) {
  switch (s) {
    case CertifyStatus::Found: return "found";
    case CertifyStatus::Exhausted: return "exhausted";
    case CertifyStatus::ProvablyNotConnected: return "provably-not-connected";
  }
  return "unknown";
}

namespace {

std::vector<Flag> vertex_orbit_flags(const TriangulationMap& T, Flag x) {
  std::vector<Flag> orbit{x}, stack{x};
  while (!stack.empty()) {
    Flag f = stack.back();
    stack.pop_back();
    for (Flag n : {T.s(1, f), T.s(2, f)}) {
      if (std::find(orbit.begin(), orbit.end(), n) == orbit.end()) {
        orbit.push_back(n);
        stack.push_back(n);
      }
    }
  }
  return orbit;
}

std::array<Flag, 4> edge_orbit(const TriangulationMap& T, Flag e) {
  return {e, T.s(0, e), T.s(2, e), T.s(0, T.s(2, e))};
}

// A flag that stays at its vertex across a flip of `avoid` (the four flags of
// a flipped edge migrate to the apexes; all others keep their corner).
Flag stable_vertex_flag(const TriangulationMap& T, Flag at, Flag avoid) {
  auto av = edge_orbit(T, avoid);
  for (Flag f : vertex_orbit_flags(T, at))
    if (std::find(av.begin(), av.end(), f) == av.end()) return f;
  raise(Errc::GadgetFailed, "vertex has no flag clear of the flipped edge");
}

// m canonical-face subdivisions; every move addresses face rank 0, matching
// iterated_subdivision step by step.
MoveScript tower_script(const TriangulationMap& X, std::uint32_t m) {
  MoveScript s;
  s.start_key = canonical_key(X);
  s.all_regular = true;
  TriangulationMap U = X;
  for (std::uint32_t k = 0; k < m; ++k) {
    CanonicalForm cf = canonical_form(U);
    s.moves.push_back({MoveKind::FaceSubdivide, 0});
    U = face_subdivide(U, cf.rank_to_rep[2][0]);
  }
  s.end_key = canonical_key(U);
  return s;
}

// ---- cone bookkeeping for the contraction lift -----------------------------

// A lifted map with one tracked degree-3 vertex (the cone) whose removal
// recovers the lower level.
struct Cone {
  TriangulationMap V;
  Flag w_flag = 0;  // any flag at the cone vertex

  Flag w() const { return V.vertex_of(w_flag); }
};

struct Quotient {
  TriangulationMap K;
  std::vector<Flag> old_to_new;
  Flag spoke = 0;   // the contracted spoke in V
  Flag base_K = 0;  // face of K restored under the cone
};

std::array<Flag, 3> cone_spokes(const Cone& c) {
  auto link = c.V.link_of_vertex(c.w());
  if (link.size() != 3)
    raise(Errc::GadgetFailed, "cone vertex is not of degree 3");
  return {link[0].edge, link[1].edge, link[2].edge};
}

Quotient quotient_of(const Cone& c) {
  auto spokes = cone_spokes(c);
  Flag spoke = *std::min_element(spokes.begin(), spokes.end());
  Flag dead1 = c.V.face_of(spoke), dead2 = c.V.face_of(c.V.s(2, spoke));
  Flag base_V = kNoFlag;
  for (Flag z : vertex_orbit_flags(c.V, c.w_flag)) {
    Flag f = c.V.face_of(z);
    if (f != dead1 && f != dead2) {
      base_V = f;
      break;
    }
  }
  if (base_V == kNoFlag) raise(Errc::GadgetFailed, "cone base not found");
  ContractResult cr = contract_with_mapping(c.V, spoke);
  Flag base_K = cr.map.face_of(cr.old_to_new[base_V]);
  return Quotient{std::move(cr.map), std::move(cr.old_to_new), spoke, base_K};
}

// The edge of V over a quotient edge g, avoiding the cone vertex (a merged
// pair contains exactly one spoke).
Flag preimage_edge(const Cone& c, const Quotient& q, Flag g) {
  Flag w = c.w();
  for (Flag x = 0; x < c.V.flag_count(); ++x) {
    Flag nx = q.old_to_new[x];
    if (nx == kNoFlag || q.K.edge_of(nx) != g) continue;
    Flag e = c.V.edge_of(x);
    auto ee = c.V.edge_endpoints(e);
    if (ee[0] != w && ee[1] != w) return e;
  }
  raise(Errc::GadgetFailed, "quotient edge has no liftable preimage");
}

// First edge on a shortest dual path between two faces of K.
Flag first_dual_edge(const TriangulationMap& K, Flag from, Flag to) {
  std::unordered_map<Flag, Flag> parent;  // face -> face we came from
  parent[from] = kNoFlag;
  std::deque<Flag> queue{from};
  while (!queue.empty() && !parent.count(to)) {
    Flag f = queue.front();
    queue.pop_front();
    Flag x1 = f, x3 = K.s(1, K.s(0, x1)), x5 = K.s(1, K.s(0, x3));
    for (Flag side : {x1, x3, x5}) {
      Flag nb = K.face_of(K.s(2, side));
      if (!parent.count(nb)) {
        parent[nb] = f;
        queue.push_back(nb);
      }
    }
  }
  Flag step = to;
  while (parent.at(step) != from) step = parent.at(step);
  // the crossed edge, as seen from `from`
  Flag x1 = from, x3 = K.s(1, K.s(0, x1)), x5 = K.s(1, K.s(0, x3));
  for (Flag side : {x1, x3, x5})
    if (K.face_of(K.s(2, side)) == step) return K.edge_of(side);
  raise(Errc::GadgetFailed, "dual step lost its crossing edge");
}

void record_flip(Cone& c, Flag e, std::vector<Move>& out) {
  if (!is_regular_flip(c.V, e))
    raise(Errc::GadgetFailed, "lifted flip fell out of the regular class");
  CanonicalForm cf = canonical_form(c.V);
  out.push_back({MoveKind::Flip, cf.edge_rank(e)});
  c.w_flag = stable_vertex_flag(c.V, c.w_flag, e);
  c.V = flip(c.V, e);
}

// Walk the cone to the face of the quotient with the given canonical rank.
// Each step crosses one dual edge: flip the crossed side, then the spoke to
// the corner the cone leaves behind.
void transfer_cone(Cone& c, std::uint32_t target_rank, std::vector<Move>& out) {
  for (std::uint32_t guard = 0;; ++guard) {
    Quotient q = quotient_of(c);
    CanonicalForm cf = canonical_form(q.K);
    if (cf.face_rank(q.base_K) == target_rank) return;
    if (guard > q.K.flag_count())
      raise(Errc::GadgetFailed, "cone transfer does not converge");
    Flag target = cf.rank_to_rep[2][target_rank];
    Flag eps = first_dual_edge(q.K, q.base_K, target);
    Flag pre = preimage_edge(c, q, eps);
    auto ends = c.V.edge_endpoints(pre);
    auto spokes = cone_spokes(c);
    Flag w = c.w(), sp_c = kNoFlag;
    for (Flag sp : spokes) {
      auto se = c.V.edge_endpoints(sp);
      Flag far = se[0] == w ? se[1] : se[0];
      if (far != ends[0] && far != ends[1]) sp_c = sp;
    }
    if (sp_c == kNoFlag) raise(Errc::GadgetFailed, "cone lost its far spoke");
    record_flip(c, pre, out);
    record_flip(c, sp_c, out);
  }
}

// Replay a pure-flip script through the cone: resolve each move on the
// quotient, step the cone aside when its base touches the flipped faces,
// and flip the matching edge upstairs.
void rider_replay(Cone& c, const MoveScript& inner, std::vector<Move>& out) {
  CanonicalKey expected = inner.start_key;
  for (const Move& m : inner.moves) {
    if (m.kind != MoveKind::Flip)
      raise(Errc::GadgetFailed, "contraction lift expects a pure flip script");
    for (int attempt = 0;; ++attempt) {
      if (attempt > 2)
        raise(Errc::GadgetFailed, "cone dodge does not settle");
      Quotient q = quotient_of(c);
      if (canonical_key(q.K) != expected)
        raise(Errc::GadgetFailed, "quotient drifted during the lift");
      CanonicalForm cf = canonical_form(q.K);
      Flag g = resolve_target(cf, m);
      Flag g1 = q.K.face_of(g), g2 = q.K.face_of(q.K.s(2, g));
      if (q.base_K == g1 || q.base_K == g2) {
        std::uint32_t r1 = cf.face_rank(g1), r2 = cf.face_rank(g2);
        std::uint32_t tr = 0;
        while (tr == r1 || tr == r2) ++tr;
        transfer_cone(c, tr, out);
        continue;
      }
      expected = canonical_key(flip(q.K, g));
      record_flip(c, preimage_edge(c, q, g), out);
      break;
    }
  }
  if (expected != inner.end_key)
    raise(Errc::GadgetFailed, "lifted replay missed the script end");
}

// ---- degree reduction ------------------------------------------------------

struct ReductionState {
  TriangulationMap V;
  Flag w_flag = 0;
  std::vector<Move> moves;
};

bool quotient_matches(const TriangulationMap& V, Flag w_flag,
                      const CanonicalKey& want) {
  Cone probe{V, w_flag};
  return canonical_key(quotient_of(probe).K) == want;
}

// Slide neighbours of w into u until w has degree 3 and removing it recovers
// the target. Two slide directions give a shallow backtracking search.
bool reduce_dfs(const TriangulationMap& V, Flag w_flag, Flag u_flag,
                const CanonicalKey& want, std::vector<Move>& moves,
                std::optional<ReductionState>& out) {
  Flag w = V.vertex_of(w_flag);
  auto link = V.link_of_vertex(w);
  std::size_t d = link.size();
  if (d == 3) {
    if (!quotient_matches(V, w_flag, want)) return false;
    out = ReductionState{V, w_flag, moves};
    return true;
  }
  Flag u = V.vertex_of(u_flag);
  std::size_t tu = d;
  for (std::size_t t = 0; t < d; ++t)
    if (link[t].vertex == u) tu = t;
  if (tu == d) raise(Errc::GadgetFailed, "cone anchor left the link");
  for (Flag cand : {link[(tu + 1) % d].edge, link[(tu + d - 1) % d].edge}) {
    if (!is_regular_flip(V, cand)) continue;
    CanonicalForm cf = canonical_form(V);
    moves.push_back({MoveKind::Flip, cf.edge_rank(cand)});
    Flag w2 = stable_vertex_flag(V, w_flag, cand);
    if (reduce_dfs(flip(V, cand), w2, u_flag, want, moves, out)) return true;
    moves.pop_back();
  }
  return false;
}

// Wider fallback: breadth-first over regular flips of edges at w.
bool reduce_bfs(const TriangulationMap& C, Flag w_flag,
                const CanonicalKey& want, const SearchBudget& budget,
                std::optional<ReductionState>& out) {
  struct Node {
    TriangulationMap V;
    Flag w_flag;
    std::uint32_t parent;
    Move move;
  };
  auto state_key = [](const TriangulationMap& V, Flag w) {
    CanonicalForm cf = canonical_form(V);
    CanonicalKey k = cf.key;
    k.w.push_back(cf.vertex_rank(V.vertex_of(w)));
    return k;
  };
  std::vector<Node> nodes{{C, w_flag, kNoParent, Move{}}};
  std::unordered_set<CanonicalKey, KeyHash> seen{state_key(C, w_flag)};
  for (std::uint32_t i = 0; i < nodes.size(); ++i) {
    const Node nd = nodes[i];
    if (nd.V.link_of_vertex(nd.V.vertex_of(nd.w_flag)).size() == 3 &&
        quotient_matches(nd.V, nd.w_flag, want)) {
      std::vector<Move> moves;
      for (std::uint32_t j = i; j != 0; j = nodes[j].parent)
        moves.push_back(nodes[j].move);
      std::reverse(moves.begin(), moves.end());
      out = ReductionState{nd.V, nd.w_flag, std::move(moves)};
      return true;
    }
    if (nodes.size() >= budget.max_nodes) return false;
    Flag w = nd.V.vertex_of(nd.w_flag);
    for (const auto& step : nd.V.link_of_vertex(w)) {
      if (!is_regular_flip(nd.V, step.edge)) continue;
      CanonicalForm cf = canonical_form(nd.V);
      Move mv{MoveKind::Flip, cf.edge_rank(step.edge)};
      Flag w2 = stable_vertex_flag(nd.V, nd.w_flag, step.edge);
      TriangulationMap next = flip(nd.V, step.edge);
      CanonicalKey k = state_key(next, w2);
      if (!seen.insert(k).second) continue;
      nodes.push_back({std::move(next), w2, i, mv});
    }
  }
  return false;
}

// One level of the contraction lift: C --flips--> a map that subdivides
// inner's start, then ride inner and park the cone on the canonical face.
MoveScript lift_level(const TriangulationMap& C, Flag h,
                      const MoveScript& inner, const SearchBudget& budget) {
  if (!C.is_regular())
    raise(Errc::PreconditionFailed, "contraction chain left the regular class");
  auto ends = C.edge_endpoints(h);
  std::array<Flag, 2> order{ends[0], ends[1]};
  auto deg = [&](Flag v) { return C.vertex_degree(v); };
  if (deg(order[1]) < deg(order[0]) ||
      (deg(order[1]) == deg(order[0]) && order[1] < order[0]))
    std::swap(order[0], order[1]);
  for (Flag w_handle : order) {
    Flag u_handle = w_handle == ends[0] ? ends[1] : ends[0];
    std::optional<ReductionState> red;
    std::vector<Move> prefix;
    bool okey = reduce_dfs(C, w_handle, u_handle, inner.start_key, prefix, red);
    if (!okey) okey = reduce_bfs(C, w_handle, inner.start_key, budget, red);
    if (!okey) continue;
    Cone cone{std::move(red->V), red->w_flag};
    std::vector<Move> moves = std::move(red->moves);
    rider_replay(cone, inner, moves);
    transfer_cone(cone, 0, moves);
    MoveScript script;
    script.start_key = canonical_key(C);
    script.end_key = canonical_key(cone.V);
    script.all_regular = true;
    script.moves = std::move(moves);
    return script;
  }
  raise(Errc::Exhausted, "degree reduction budget exhausted");
}

std::vector<Move> concat(std::initializer_list<const std::vector<Move>*> parts) {
  std::vector<Move> all;
  for (const auto* p : parts) all.insert(all.end(), p->begin(), p->end());
  return all;
}

}  // namespace

EquivalenceCertificate negami_lift(const TriangulationMap& T1,
                                   const TriangulationMap& S,
                                   const MoveScript& contractions,
                                   const SearchBudget& budget) {
  if (!T1.is_regular() || !S.is_regular())
    raise(Errc::NotRegular, "contraction lift needs regular endpoints");
  if (contractions.start_key != canonical_key(T1))
    raise(Errc::StartKeyMismatch, "contraction script does not start at T1");
  if (contractions.end_key != canonical_key(S))
    raise(Errc::EndKeyMismatch, "contraction script does not end at S");
  std::vector<TriangulationMap> chain{T1};
  std::vector<Flag> handles;
  for (const Move& m : contractions.moves) {
    if (m.kind != MoveKind::Contract)
      raise(Errc::PreconditionFailed, "expected a pure contraction script");
    CanonicalForm cf = canonical_form(chain.back());
    Flag h = resolve_target(cf, m);
    handles.push_back(h);
    chain.push_back(contract(chain.back(), h));
  }
  const std::size_t r = handles.size();
  std::vector<CanonicalKey> tower_keys{canonical_key(S)};
  {
    TriangulationMap W = S;
    for (std::size_t k = 0; k < r; ++k) {
      W = face_subdivide(W, canonical_form(W).rank_to_rep[2][0]);
      tower_keys.push_back(canonical_key(W));
    }
  }
  MoveScript cur;
  cur.start_key = cur.end_key = tower_keys[0];
  cur.all_regular = true;
  for (std::size_t i = r; i-- > 0;) {
    cur = lift_level(chain[i], handles[i], cur, budget);
    if (cur.end_key != tower_keys[r - i])
      raise(Errc::GadgetFailed, "lift level missed the subdivision tower");
  }
  EquivalenceCertificate cert;
  cert.script = std::move(cur);
  cert.strategy = {
      {"negami-lift", static_cast<std::uint32_t>(cert.script.moves.size())}};
  if (!verify_script(cert.script, T1))
    raise(Errc::GadgetFailed, "contraction lift failed its own replay");
  return cert;
}

EquivalenceCertificate corollary_equivalence(const TriangulationMap& T1,
                                             const TriangulationMap& T2,
                                             const SearchBudget& budget) {
  if (!T1.is_regular() || !T2.is_regular())
    raise(Errc::NotRegular, "corollary endpoints must be regular");
  if (!(T1.surface_class() == T2.surface_class()))
    raise(Errc::PreconditionFailed, "corollary endpoints on different surfaces");
  Counts c1 = T1.counts();
  if (c1.v != T2.counts().v)
    raise(Errc::PreconditionFailed, "corollary endpoints differ in size");
  const auto th = thresholds(T1.surface_class());
  const std::uint32_t m = static_cast<std::uint32_t>(th.m_for(c1.v));

  MoveScript up1 = tower_script(T1, m);
  MoveScript down1 = reverse_script(up1, T1);
  MoveScript bbs1 = bary_by_subdivisions(T1);

  MoveScript path = find_path(T1, T2, FlipMode::AllFlips, budget);
  std::vector<Move> lifted;
  TriangulationMap Z = T1;
  for (const Move& m0 : path.moves) {
    CanonicalForm cf = canonical_form(Z);
    Flag h = resolve_target(cf, m0);
    MoveScript sub = lift_flip_to_bary2(Z, h);
    if (!sub.all_regular)
      raise(Errc::GadgetFailed, "double subdivision left an irregular flip");
    lifted.insert(lifted.end(), sub.moves.begin(), sub.moves.end());
    Z = flip(Z, h);
  }
  if (canonical_key(Z) != canonical_key(T2))
    raise(Errc::GadgetFailed, "flip path replay missed T2");

  MoveScript bbs2 = bary_by_subdivisions(T2);
  MoveScript down2 = reverse_script(bbs2, T2);
  MoveScript up2 = tower_script(T2, m);

  EquivalenceCertificate cert;
  cert.script.start_key = up1.end_key;
  cert.script.end_key = up2.end_key;
  cert.script.all_regular = true;
  cert.script.moves =
      concat({&down1.moves, &bbs1.moves, &lifted, &down2.moves, &up2.moves});
  cert.strategy = {
      {"tower-contract", m},
      {"bary-expand", static_cast<std::uint32_t>(bbs1.moves.size())},
      {"lifted-path", static_cast<std::uint32_t>(lifted.size())},
      {"bary-collapse", static_cast<std::uint32_t>(down2.moves.size())},
      {"tower-subdivide", m}};
  if (!verify_script(cert.script, iterated_subdivision(T1, m)))
    raise(Errc::GadgetFailed, "corollary certificate failed its own replay");
  return cert;
}

CertifyResult certify_equivalence(const TriangulationMap& T1,
                                  const TriangulationMap& T2,
                                  const CertifyOptions& opts) {
  if (!T1.is_regular() || !T2.is_regular())
    raise(Errc::NotRegular, "certification needs regular triangulations");
  if (!(T1.surface_class() == T2.surface_class()))
    raise(Errc::PreconditionFailed, "triangulations of different surfaces");
  if (T1.counts().v != T2.counts().v)
    raise(Errc::PreconditionFailed, "triangulations of different size");

  CertifyResult result;
  CanonicalKey k1 = canonical_key(T1), k2 = canonical_key(T2);
  if (k1 == k2) {
    result.status = CertifyStatus::Found;
    EquivalenceCertificate cert;
    cert.script.start_key = k1;
    cert.script.end_key = k2;
    cert.script.all_regular = true;
    cert.strategy = {{"identity", 0}};
    result.certificate = std::move(cert);
    return result;
  }

  bool disconnected_proven = false;
  if (opts.use_direct_search) {
    FlipGraphStore store =
        explore({T1}, FlipMode::RegularFlips, opts.budget, opts.threads);
    auto it = store.index.find(k2);
    if (it != store.index.end()) {
      result.status = CertifyStatus::Found;
      EquivalenceCertificate cert;
      cert.script = path_from_store(store, it->second);
      cert.strategy = {
          {"direct-bfs",
           static_cast<std::uint32_t>(cert.script.moves.size())}};
      result.certificate = std::move(cert);
      return result;
    }
    if (store.complete) {
      disconnected_proven = true;
      result.component.reserve(store.nodes.size());
      for (const auto& nd : store.nodes) result.component.push_back(nd.key);
    }
  }

  if (opts.use_theorem_pipeline) {
    try {
      ReduceResult r1 = reduce_to_irreducible(T1);
      ReduceResult r2 = reduce_to_irreducible(T2);
      const auto th = thresholds(T1.surface_class());
      if (th.chi <= 0) {
        if (static_cast<long long>(r1.irreducible.counts().v) >
                th.irreducible_bound ||
            static_cast<long long>(r2.irreducible.counts().v) >
                th.irreducible_bound)
          raise(Errc::GadgetFailed, "irreducible map beyond the size bound");
      }
      EquivalenceCertificate n1 =
          negami_lift(T1, r1.irreducible, r1.contractions, opts.budget);
      EquivalenceCertificate n2 =
          negami_lift(T2, r2.irreducible, r2.contractions, opts.budget);
      std::uint32_t m1 = T1.counts().v - r1.irreducible.counts().v;
      std::uint32_t m2 = T2.counts().v - r2.irreducible.counts().v;
      TriangulationMap X1 = iterated_subdivision(r1.irreducible, m1);
      TriangulationMap X2 = iterated_subdivision(r2.irreducible, m2);
      const std::uint32_t mc =
          static_cast<std::uint32_t>(th.m_for(X1.counts().v));
      EquivalenceCertificate middle =
          corollary_equivalence(X1, X2, opts.budget);
      MoveScript up1 = tower_script(X1, mc);
      MoveScript up2 = tower_script(X2, mc);
      MoveScript down2 = reverse_script(up2, X2);
      MoveScript back2 = reverse_script(n2.script, T2);

      EquivalenceCertificate cert;
      cert.script.start_key = k1;
      cert.script.end_key = k2;
      cert.script.all_regular = true;
      cert.script.moves =
          concat({&n1.script.moves, &up1.moves, &middle.script.moves,
                  &down2.moves, &back2.moves});
      cert.strategy = n1.strategy;
      cert.strategy.push_back({"tower-subdivide", mc});
      cert.strategy.insert(cert.strategy.end(), middle.strategy.begin(),
                           middle.strategy.end());
      cert.strategy.push_back({"tower-contract", mc});
      for (auto seg = n2.strategy.rbegin(); seg != n2.strategy.rend(); ++seg)
        cert.strategy.push_back({seg->tag + "-reversed", seg->move_count});

      VerifyReport rep = verify_certificate_report(cert, T1, &T2);
      if (!rep.ok)
        raise(Errc::GadgetFailed,
              "assembled certificate failed verification: " + rep.reason);
      result.status = CertifyStatus::Found;
      result.certificate = std::move(cert);
      result.component.clear();
      return result;
    } catch (const Error& err) {
      if (err.code() != Errc::Exhausted && err.code() != Errc::LiftNotFound &&
          err.code() != Errc::NotConnected)
        throw;
    }
  }

  result.status = disconnected_proven ? CertifyStatus::ProvablyNotConnected
                                      : CertifyStatus::Exhausted;
  if (!disconnected_proven) result.component.clear();
  return result;
}

VerifyReport verify_certificate_report(const EquivalenceCertificate& cert,
                                       const TriangulationMap& start_map,
                                       const TriangulationMap* end_map) {
  const MoveScript& s = cert.script;
  auto fail = [](std::string reason, std::uint32_t idx) {
    VerifyReport r;
    r.ok = false;
    r.reason = std::move(reason);
    r.move_index = idx;
    return r;
  };
  if (!s.all_regular)
    return fail("certificate script must declare all_regular", 0);
  if (!start_map.is_regular()) return fail("start map is not regular", 0);
  if (canonical_key(start_map) != s.start_key)
    return fail("start key mismatch", 0);
  if (!cert.strategy.empty()) {
    std::uint64_t sum = 0;
    for (const auto& seg : cert.strategy) sum += seg.move_count;
    if (sum != s.moves.size())
      return fail("strategy segments do not cover the moves", 0);
  }
  TriangulationMap U = start_map;
  std::uint64_t subs = 0, cons = 0;
  for (std::uint32_t i = 0; i < s.moves.size(); ++i) {
    const Move& m = s.moves[i];
    try {
      CanonicalForm cf = canonical_form(U);
      Flag h = resolve_target(cf, m);
      switch (m.kind) {
        case MoveKind::Flip:
          if (!can_flip(U, h)) return fail("blocked flip", i);
          if (!is_regular_flip(U, h)) return fail("flip is not regular", i);
          U = flip(U, h);
          break;
        case MoveKind::Contract: {
          auto ee = U.edge_endpoints(h);
          if (U.vertex_degree(ee[0]) != 3 && U.vertex_degree(ee[1]) != 3)
            return fail("contract without a degree-3 endpoint", i);
          if (!can_contract(U, h))
            return fail("contract leaves the regular class", i);
          U = contract(U, h);
          ++cons;
          break;
        }
        case MoveKind::FaceSubdivide:
          U = face_subdivide(U, h);
          ++subs;
          break;
      }
    } catch (const Error& err) {
      return fail(err.what(), i);
    }
  }
  const auto n = static_cast<std::uint32_t>(s.moves.size());
  if (subs != cons)
    return fail("unbalanced subdivide and contract moves", n);
  if (canonical_key(U) != s.end_key) return fail("end key mismatch", n);
  if (end_map && canonical_key(*end_map) != s.end_key)
    return fail("end map does not match the certificate", n);
  VerifyReport r;
  r.ok = true;
  r.move_index = n;
  return r;
}

bool verify_certificate(const EquivalenceCertificate& cert,
                        const TriangulationMap& start_map,
                        const TriangulationMap* end_map) {
  return verify_certificate_report(cert, start_map, end_map).ok;
}

EquivalenceCertificate reverse_certificate(const EquivalenceCertificate& cert,
                                           const TriangulationMap& start_map) {
  EquivalenceCertificate out;
  out.script = reverse_script(cert.script, start_map);
  out.strategy.assign(cert.strategy.rbegin(), cert.strategy.rend());
  return out;
}

}  // namespace flipkit
