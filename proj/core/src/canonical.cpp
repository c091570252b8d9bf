#include "flipkit/canonical.hpp"

#include <algorithm>
#include <cstddef>

namespace flipkit {

std::size_t KeyHash::operator()(const CanonicalKey& k) const {
  // FNV-1a over the word bytes
  std::size_t h = 1469598103934665603ull;
  for (std::uint32_t v : k.w)
    for (unsigned b = 0; b < 4; ++b) {
      h ^= (v >> (8 * b)) & 0xffu;
      h *= 1099511628211ull;
    }
  return h;
}

std::string key_to_hex(const CanonicalKey& k) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(8 * k.w.size());
  for (std::uint32_t v : k.w)
    for (int shift = 28; shift >= 0; shift -= 4)
      out.push_back(digits[(v >> shift) & 0xfu]);
  return out;
}

CanonicalKey key_from_hex(const std::string& hex) {
  if (hex.empty() || hex.size() % 8 != 0)
    raise(Errc::BadFormat, "key hex length must be a positive multiple of 8");
  CanonicalKey k;
  k.w.reserve(hex.size() / 8);
  for (std::size_t i = 0; i < hex.size(); i += 8) {
    std::uint32_t v = 0;
    for (std::size_t j = i; j < i + 8; ++j) {
      char c = hex[j];
      std::uint32_t d;
      if (c >= '0' && c <= '9') d = static_cast<std::uint32_t>(c - '0');
      else if (c >= 'a' && c <= 'f') d = static_cast<std::uint32_t>(c - 'a' + 10);
      else raise(Errc::BadFormat, "bad hex digit in key");
      v = (v << 4) | d;
    }
    k.w.push_back(v);
  }
  return k;
}

namespace {

// One BFS relabelling pass from `start`. Labels are granted in first-visit
// order; popping label i appends the triple (lab s0, lab s1, lab s2) of its
// flag to the word. Streaming comparison against `best` (empty = no best
// yet): returns +1 and stops early if the word exceeds best, -1 if it ends
// strictly below, 0 on a tie. On -1 the word is left in `cur`.
int run_start(const TriangulationMap& T, Flag start,
              const std::vector<std::uint32_t>& best,
              std::vector<std::uint32_t>& cur, std::vector<Flag>& order,
              std::vector<Flag>& lab, std::vector<std::uint32_t>& stamp,
              std::uint32_t epoch) {
  const std::uint32_t n = T.flag_count();
  cur.clear();
  order.clear();
  order.push_back(start);
  lab[start] = 0;
  stamp[start] = epoch;
  std::uint32_t next = 1;
  bool less = best.empty();
  std::size_t pos = 0;
  for (std::uint32_t i = 0; i < n; ++i) {
    Flag x = order[i];
    for (unsigned k = 0; k < 3; ++k) {
      Flag y = T.s(k, x);
      if (stamp[y] != epoch) {
        stamp[y] = epoch;
        lab[y] = next++;
        order.push_back(y);
      }
    }
    for (unsigned k = 0; k < 3; ++k) {
      std::uint32_t v = lab[T.s(k, x)];
      if (!less) {
        std::uint32_t b = best[pos];
        if (v > b) return +1;
        if (v < b) less = true;
      }
      cur.push_back(v);
      ++pos;
    }
  }
  return less ? -1 : 0;
}

// Lexicographically minimal word over all starts, plus the lowest start flag
// attaining it.
void search_best(const TriangulationMap& T, Flag& best_start,
                 std::vector<std::uint32_t>& best) {
  const std::uint32_t n = T.flag_count();
  std::vector<std::uint32_t> cur;
  std::vector<Flag> order, lab(n, 0);
  std::vector<std::uint32_t> stamp(n, 0);
  cur.reserve(3 * n);
  order.reserve(n);
  best.clear();
  best_start = 0;
  std::uint32_t epoch = 0;
  for (Flag s = 0; s < n; ++s) {
    int c = run_start(T, s, best, cur, order, lab, stamp, ++epoch);
    if (c < 0) {
      best.swap(cur);
      best_start = s;
    }
  }
}

}  // namespace

CanonicalKey canonical_key(const TriangulationMap& T) {
  Flag start;
  std::vector<std::uint32_t> best;
  search_best(T, start, best);
  CanonicalKey k;
  k.w.reserve(1 + best.size());
  k.w.push_back(T.flag_count());
  k.w.insert(k.w.end(), best.begin(), best.end());
  return k;
}

CanonicalForm canonical_form(const TriangulationMap& T) {
  const std::uint32_t n = T.flag_count();
  Flag start;
  std::vector<std::uint32_t> best;
  search_best(T, start, best);

  CanonicalForm cf;
  cf.key.w.reserve(1 + best.size());
  cf.key.w.push_back(n);
  cf.key.w.insert(cf.key.w.end(), best.begin(), best.end());

  // replay the winning traversal to recover the relabelling
  cf.to_canon.assign(n, kNoFlag);
  cf.from_canon.assign(n, kNoFlag);
  cf.from_canon[0] = start;
  cf.to_canon[start] = 0;
  std::uint32_t next = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    Flag x = cf.from_canon[i];
    for (unsigned k = 0; k < 3; ++k) {
      Flag y = T.s(k, x);
      if (cf.to_canon[y] == kNoFlag) {
        cf.to_canon[y] = next;
        cf.from_canon[next] = y;
        ++next;
      }
    }
  }

  for (unsigned kind = 0; kind < 3; ++kind) {
    std::vector<std::uint32_t> rank_by_handle(n, kNoFlag);
    for (std::uint32_t labl = 0; labl < n; ++labl) {
      Flag h = T.orbit_of(kind, cf.from_canon[labl]);
      if (rank_by_handle[h] == kNoFlag) {
        rank_by_handle[h] = static_cast<std::uint32_t>(cf.rank_to_rep[kind].size());
        cf.rank_to_rep[kind].push_back(h);
      }
    }
    cf.rank_of[kind].resize(n);
    for (std::uint32_t x = 0; x < n; ++x)
      cf.rank_of[kind][x] = rank_by_handle[T.orbit_of(kind, x)];
  }
  return cf;
}

TriangulationMap decode_key(const CanonicalKey& k) {
  if (k.w.empty()) raise(Errc::BadFormat, "empty key");
  const std::uint32_t n = k.w[0];
  if (k.w.size() != static_cast<std::size_t>(1) + 3ull * n)
    raise(Errc::BadFormat, "key word length does not match flag count");
  std::vector<Flag> s0(n), s1(n), s2(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    s0[x] = k.w[1 + 3 * x];
    s1[x] = k.w[1 + 3 * x + 1];
    s2[x] = k.w[1 + 3 * x + 2];
  }
  return TriangulationMap::from_map_arrays(s0, s1, s2);
}

std::vector<Flag> decoded_rank_to_rep(const TriangulationMap& T, unsigned kind) {
  // the canonical traversal of a decoded representative is the identity
  // relabelling, so first appearance in flag order equals canonical rank
  // order, and handles are minimal flags of their orbits.
  std::vector<Flag> out;
  const std::uint32_t n = T.flag_count();
  for (std::uint32_t x = 0; x < n; ++x)
    if (T.orbit_of(kind, x) == x) out.push_back(x);
  return out;
}

}  // namespace flipkit
