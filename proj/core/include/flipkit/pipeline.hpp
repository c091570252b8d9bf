#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flipkit/map.hpp"
#include "flipkit/moves.hpp"
#include "flipkit/search.hpp"

namespace flipkit {

struct Thresholds {
  int chi = 0;
  long long N = 0;                  // 9450 - 6020*chi
  long long irreducible_bound = 0;  // 270 - 171*chi
  long long m_for(long long v) const { return 35 * (v - chi); }
};
Thresholds thresholds(const SurfaceClass& surface);
Thresholds thresholds_for_chi(int chi);

// One strategy segment of a certificate: which gadget produced which moves.
struct SegmentTag {
  std::string tag;
  std::uint32_t move_count = 0;
};

// Replayable proof of regular flip equivalence. All flips are regular;
// subdivide moves are matched by contract moves of degree-3 vertices, so the
// endpoints have equal vertex counts even when the path inflates.
struct EquivalenceCertificate {
  MoveScript script;
  std::vector<SegmentTag> strategy;
};

// Certificate from T1 to a map isomorphic to the m-fold canonical-face
// subdivision tower over S, m = v(T1) - v(S), given a contraction script
// T1 -> S. Pure regular flips. Error Exhausted when the internal searches
// run out of budget.
EquivalenceCertificate negami_lift(const TriangulationMap& T1,
                                   const TriangulationMap& S,
                                   const MoveScript& contractions,
                                   const SearchBudget& budget = {});

// Certificate between the m-fold subdivision towers of T1 and T2,
// m = 35*(v - chi); requires both regular with equal v and surface.
EquivalenceCertificate corollary_equivalence(const TriangulationMap& T1,
                                             const TriangulationMap& T2,
                                             const SearchBudget& budget = {});

enum class CertifyStatus { Found, Exhausted, ProvablyNotConnected };
const char* certify_status_name(CertifyStatus s);

struct CertifyResult {
  CertifyStatus status = CertifyStatus::Exhausted;
  std::optional<EquivalenceCertificate> certificate;
  // Regular-flip component of T1 when ProvablyNotConnected.
  std::vector<CanonicalKey> component;
};

struct CertifyOptions {
  SearchBudget budget{};
  bool use_direct_search = true;  // strategy (a): regular-flip BFS
  bool use_theorem_pipeline = true;  // strategy (b): reduce/lift/corollary
  unsigned threads = 1;
};

// Strategy ladder (a) then (b). Never claims non-equivalence: absence of a
// certificate is Exhausted, except a provably exhausted regular component.
CertifyResult certify_equivalence(const TriangulationMap& T1,
                                  const TriangulationMap& T2,
                                  const CertifyOptions& opts = {});

struct VerifyReport {
  bool ok = false;
  std::string reason;            // empty when ok
  std::uint32_t move_index = 0;  // move at fault when applicable
};

// Independent replay of a certificate from start_map: start key, addressing,
// move validity, regularity of every flip, degree-3 contract bookkeeping,
// zero net vertex change, end key (and end_map's key when given).
VerifyReport verify_certificate_report(const EquivalenceCertificate& cert,
                                       const TriangulationMap& start_map,
                                       const TriangulationMap* end_map = nullptr);
bool verify_certificate(const EquivalenceCertificate& cert,
                        const TriangulationMap& start_map,
                        const TriangulationMap* end_map = nullptr);

// Certificate reversal (swap endpoints; flips invert, subdivide/contract
// pairs swap roles).
EquivalenceCertificate reverse_certificate(const EquivalenceCertificate& cert,
                                           const TriangulationMap& start_map);

}  // namespace flipkit
