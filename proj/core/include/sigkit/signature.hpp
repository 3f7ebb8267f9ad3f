#pragma once

#include <compare>
#include <vector>

#include "sigkit/bignum.hpp"
#include "sigkit/system.hpp"

namespace sigkit {

// The definitional permutation sweep visits all n! failure orders.
inline constexpr int kMaxPermutationUniverse = 9;
// Inclusion-exclusion sums over all 2^|family| subfamilies.
inline constexpr std::size_t kMaxInclusionExclusionFamily = 20;

// Unnormalized signature: entry i-1 counts the failure orderings that bring
// the system down exactly at the i-th failure. Entries are non-negative and
// sum to n!.
class CountVector {
 public:
  CountVector(int n, std::vector<BigInt> counts);

  int n() const noexcept { return n_; }
  const std::vector<BigInt>& counts() const noexcept { return counts_; }

  bool operator==(const CountVector& other) const = default;
  std::strong_ordering operator<=>(const CountVector& other) const;

 private:
  int n_;
  std::vector<BigInt> counts_;
};

// The signature proper: an exact rational probability vector. Entries from
// a CountVector additionally have n! as a common denominator.
class SignatureVector {
 public:
  SignatureVector(int n, std::vector<BigRat> entries);

  static SignatureVector from_counts(const CountVector& counts);

  int n() const noexcept { return n_; }
  const std::vector<BigRat>& entries() const noexcept { return entries_; }

  // n! times each entry; requires every product to be integral.
  CountVector to_counts() const;

  bool operator==(const SignatureVector& other) const = default;

 private:
  int n_;
  std::vector<BigRat> entries_;
};

// Partial sums S_l = s_1 + ... + s_l; non-decreasing with S_n = 1.
// C(n,l) * S_l counts the cut sets of cardinality l.
class CumulativeVector {
 public:
  static CumulativeVector from_signature(const SignatureVector& signature);
  static CumulativeVector from_counts(const CountVector& counts);

  int n() const noexcept { return n_; }
  const std::vector<BigRat>& partial_sums() const noexcept { return sums_; }

 private:
  CumulativeVector(int n, std::vector<BigRat> sums) : n_(n), sums_(std::move(sums)) {}
  int n_;
  std::vector<BigRat> sums_;
};

// Signature from the cut-set counts: S_l = (#cuts of size l) / C(n,l) and
// N_i = n! (S_i - S_{i-1}). Every division is exact for a valid system.
CountVector signature_by_counting(const System& system);

// The definitional oracle: walk each of the n! failure orders and tally the
// breakdown index. Exponentially slower than counting; n <= 9.
CountVector signature_by_permutations(const System& system);

// Closed form for the system whose minimal cuts are the first l singletons:
// N_i = (n-l)! l! C(n-i, l-1). The binomial vanishes past i = n-l+1.
CountVector series_family_counts(int n, int l);

// Closed form for its dual, the single cut {1..l}: N_i = (n-l)! l! C(i-1, l-1).
// Equals series_family_counts reversed.
CountVector dual_family_counts(int n, int l);

// Signature as a signed sum over non-empty subfamilies G of the minimal
// cuts: (-1)^(|G|+1) times the single-cut closed form at size |union G|.
// 2^|family| terms; family size <= 20.
CountVector signature_inclusion_exclusion(const AntichainFamily& family);

// Entry i maps to entry n-i+1: the signature of the dual system.
CountVector reversed(const CountVector& counts);

}  // namespace sigkit
