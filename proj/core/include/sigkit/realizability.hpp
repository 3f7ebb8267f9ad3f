#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sigkit/bignum.hpp"
#include "sigkit/signature.hpp"
#include "sigkit/subset.hpp"
#include "sigkit/system.hpp"

namespace sigkit {

// Exhaustive enumeration walks every antichain on n elements; the count
// grows like the Dedekind numbers, so it is capped at n = 5.
inline constexpr int kMaxAchievableUniverse = 5;

// Face counts (f_0, ..., f_n) of a set family on n vertices, where f_l
// counts the l-element members; f_0 = 1 stands for the empty set and every
// entry is bounded by C(n, l). For a system this is the per-size count of
// NON-cut subsets, the complement of the cumulative signature.
class FVector {
 public:
  FVector(int n, std::vector<BigInt> faces);

  int n() const noexcept { return n_; }
  const std::vector<BigInt>& faces() const noexcept { return faces_; }
  const BigInt& at_level(int l) const { return faces_.at(static_cast<std::size_t>(l)); }

  friend bool operator==(const FVector&, const FVector&) = default;

 private:
  int n_;
  std::vector<BigInt> faces_;  // size n + 1
};

// f_l = C(n,l) (s_{l+1} + ... + s_n) for l = 1..n, with f_0 = 1. Throws
// non_integer_face_count_error when some product is not an integer, which
// already rules out a realization.
FVector fvector_from_candidate(const SignatureVector& candidate);

// Result of the shadow test: at the first failing level, `shadow` is the
// least possible number of (level-1)-sets under f_level sets and `bound`
// is the f_{level-1} actually available.
struct ShadowCheckResult {
  bool pass = true;
  int level = 0;
  BigInt shadow;
  BigInt bound;
};

// The face-count feasibility test: for every level from n down to 1,
// shadow_of(f_l, l) <= f_{l-1}. Exactly the f-vectors of downward-closed
// families pass.
ShadowCheckResult kk_check(const FVector& f);

enum class RejectionStage {
  not_probability_vector,
  non_integer_face_count,
  shadow_violation,
};

std::string to_string(RejectionStage stage);

struct Violation {
  RejectionStage stage;
  // Offending level for the levelled stages; 0 otherwise.
  int level = 0;
  BigInt shadow;
  BigInt bound;
};

struct RealizabilityVerdict {
  bool realizable = false;
  std::optional<AntichainFamily> witness;
  std::optional<Violation> violation;
};

// The full decision pipeline: probability-vector validation, integral face
// counts, shadow test, then witness synthesis with an exact signature
// verification. Rejections carry the failing stage instead of throwing.
RealizabilityVerdict check_candidate(const std::vector<BigRat>& candidate);
RealizabilityVerdict check_candidate(const CountVector& candidate);

// The constructive half on its own: cut-set segments per level are the
// first (s_1 + ... + s_l) C(n,l) l-subsets in lex order, and the witness is
// the minimal family of their union. Throws if the candidate fails the
// feasibility tests that check_candidate reports as verdicts.
AntichainFamily synthesize(const SignatureVector& candidate);

// The per-level segments themselves (index l-1 holds level l), for
// inspection and for the superset criterion below.
std::vector<SubsetFamily> synthesis_segments(const SignatureVector& candidate);

struct CriterionResult {
  bool pass = true;
  int level = 0;
};

// Checks that each level's segment pulls in every (l+1)-superset of each of
// its members; segments[i] is the chosen family at level i+1, all over one
// universe. Equivalent to the shadow test on the complementary face counts.
CriterionResult criterion_check(const std::vector<SubsetFamily>& segments);

// The empty set plus the first f_l colex l-subsets per level, on vertices
// 1..n. Downward-closed exactly when kk_check passes.
SubsetFamily build_reverse_lex_complex(const FVector& f);

// Every antichain family on n components (n <= 5), in canonical order.
std::vector<AntichainFamily> enumerate_antichain_families(int n);

// The deduplicated, sorted set of count vectors realized by some system on
// n components (n <= 5).
std::vector<CountVector> enumerate_achievable(int n);

}  // namespace sigkit
