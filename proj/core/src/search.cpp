#include "flipkit/search.hpp"

#include <algorithm>
#include <thread>

#include "flipkit/seeds.hpp"

namespace flipkit {

namespace {

struct Candidate {
  Move move;
  CanonicalKey key;
  std::uint32_t v = 0;
  bool regular = false;
};

// All applicable flips of the decoded representative, by canonical edge rank.
std::vector<Candidate> expand_node(const CanonicalKey& key, FlipMode mode) {
  TriangulationMap rep = decode_key(key);
  const bool rep_regular = rep.is_regular();
  std::vector<Flag> edges = decoded_rank_to_rep(rep, 1);
  std::vector<Candidate> out;
  for (std::uint32_t r = 0; r < edges.size(); ++r) {
    Flag h = edges[r];
    if (!can_flip(rep, h)) continue;
    TriangulationMap next = flip(rep, h);
    bool next_regular = next.is_regular();
    if (mode == FlipMode::RegularFlips && !(rep_regular && next_regular))
      continue;
    out.push_back({{MoveKind::Flip, r}, canonical_key(next), next.counts().v,
                   next_regular});
  }
  return out;
}

struct Driver {
  FlipGraphStore store;
  SearchBudget budget;
  FlipMode mode;
  unsigned threads;
  const CanonicalKey* stop = nullptr;
  std::uint32_t stop_index = kNoParent;
  bool halted = false;

  void add_root(const TriangulationMap& T) {
    CanonicalKey key = canonical_key(T);
    if (store.index.count(key)) return;
    if (store.nodes.size() >= budget.max_nodes) {
      store.complete = false;
      halted = true;
      return;
    }
    std::uint32_t j = static_cast<std::uint32_t>(store.nodes.size());
    store.nodes.push_back(
        {key, kNoParent, Move{}, 0, T.counts().v, T.is_regular()});
    store.index.emplace(std::move(key), j);
    if (stop && store.nodes[j].key == *stop) {
      stop_index = j;
      halted = true;
    }
  }

  // Registers one transition found while expanding node i. Returns false to
  // halt the whole exploration (budget hit or stop key reached).
  bool merge(std::uint32_t i, Candidate&& c) {
    auto it = store.index.find(c.key);
    std::uint32_t j;
    if (it != store.index.end()) {
      j = it->second;
    } else {
      if (store.nodes.size() >= budget.max_nodes) {
        store.complete = false;
        return false;
      }
      j = static_cast<std::uint32_t>(store.nodes.size());
      store.nodes.push_back({c.key, i, c.move, store.nodes[i].depth + 1, c.v,
                             c.regular});
      store.index.emplace(std::move(c.key), j);
      if (stop && store.nodes[j].key == *stop) {
        stop_index = j;
        store.edges.push_back({i, j, c.move});
        return false;
      }
    }
    store.edges.push_back({i, j, c.move});
    return true;
  }

  void run() {
    if (halted) return;
    if (threads <= 1) {
      for (std::uint32_t i = 0;
           i < static_cast<std::uint32_t>(store.nodes.size()); ++i) {
        if (store.nodes[i].depth >= budget.max_depth) {
          store.complete = false;
          continue;
        }
        for (Candidate& c : expand_node(store.nodes[i].key, mode))
          if (!merge(i, std::move(c))) return;
      }
      return;
    }
    // layer-parallel: expansion runs concurrently, merging stays in node
    // order, so the store is identical to the serial one
    std::uint32_t lo = 0;
    while (lo < store.nodes.size()) {
      std::uint32_t depth = store.nodes[lo].depth;
      if (depth >= budget.max_depth) {
        store.complete = false;
        return;
      }
      std::uint32_t hi = lo;
      while (hi < store.nodes.size() && store.nodes[hi].depth == depth) ++hi;
      std::vector<std::vector<Candidate>> results(hi - lo);
      const unsigned nt =
          std::min<std::uint32_t>(threads, hi - lo ? hi - lo : 1);
      std::vector<std::thread> pool;
      pool.reserve(nt);
      for (unsigned t = 0; t < nt; ++t)
        pool.emplace_back([&, t] {
          for (std::uint32_t k = lo + t; k < hi; k += nt)
            results[k - lo] = expand_node(store.nodes[k].key, mode);
        });
      for (auto& th : pool) th.join();
      for (std::uint32_t k = lo; k < hi; ++k)
        for (Candidate& c : results[k - lo])
          if (!merge(k, std::move(c))) return;
      lo = hi;
    }
  }
};

Driver make_driver(const std::vector<TriangulationMap>& roots, FlipMode mode,
                   const SearchBudget& budget, unsigned threads,
                   const CanonicalKey* stop) {
  Driver d;
  d.store.mode = mode;
  d.budget = budget;
  d.mode = mode;
  d.threads = threads;
  d.stop = stop;
  for (const TriangulationMap& T : roots) {
    d.add_root(T);
    if (d.halted) break;
  }
  d.run();
  return d;
}

}  // namespace

FlipGraphStore explore(const std::vector<TriangulationMap>& roots,
                       FlipMode mode, const SearchBudget& budget,
                       unsigned threads) {
  return make_driver(roots, mode, budget, threads, nullptr).store;
}

MoveScript path_from_store(const FlipGraphStore& store, std::uint32_t node) {
  if (node >= store.nodes.size())
    raise(Errc::InvalidHandle, "node index out of range");
  std::vector<Move> moves;
  std::uint32_t cur = node;
  while (store.nodes[cur].parent != kNoParent) {
    moves.push_back(store.nodes[cur].parent_move);
    cur = store.nodes[cur].parent;
  }
  std::reverse(moves.begin(), moves.end());
  return {store.nodes[cur].key, store.nodes[node].key,
          store.mode == FlipMode::RegularFlips, std::move(moves)};
}

MoveScript find_path(const TriangulationMap& T1, const TriangulationMap& T2,
                     FlipMode mode, const SearchBudget& budget,
                     unsigned threads) {
  CanonicalKey target = canonical_key(T2);
  Driver d = make_driver({T1}, mode, budget, threads, &target);
  if (d.stop_index == kNoParent) {
    if (!d.store.complete)
      raise(Errc::Exhausted, "budget ran out before reaching the target");
    raise(Errc::NotConnected,
          "the component of the start map does not contain the target");
  }
  MoveScript script = path_from_store(d.store, d.stop_index);
  ScriptVerdict vd = verify_script_verdict(script, T1);
  if (!vd.ok)
    raise(vd.code, "internal: path replay failed at move " +
                       std::to_string(vd.move_index) + ": " + vd.detail);
  return script;
}

FlipGraphStore enumerate_triangulations(const SurfaceClass& surface,
                                        std::uint32_t v,
                                        const SearchBudget& budget,
                                        unsigned threads) {
  TriangulationMap seed = standard_seed(surface, v);
  return explore({seed}, FlipMode::AllFlips, budget, threads);
}

}  // namespace flipkit
