#pragma once

#include <vector>

#include "sigkit/bignum.hpp"
#include "sigkit/subset.hpp"

namespace sigkit {

// One binomial term C(upper, lower) of a cascade decomposition.
struct CascadeTerm {
  BigInt upper;
  int lower;

  friend bool operator==(const CascadeTerm&, const CascadeTerm&) = default;
};

// The unique expansion of a positive integer m at level l as
//
//   m = C(n_l, l) + C(n_{l-1}, l-1) + ... + C(n_j, j)
//
// with n_l > n_{l-1} > ... > n_j >= j >= 1. The lower indices run
// consecutively from the level down to some j; the list is shorter than l
// terms exactly when the greedy remainder hits zero early. This is the
// carrier of the shadow and shade operators below.
class CascadeRep {
 public:
  CascadeRep(int level, std::vector<CascadeTerm> terms);

  int level() const noexcept { return level_; }
  const std::vector<CascadeTerm>& terms() const noexcept { return terms_; }

  // The represented integer, by summing the terms back up.
  BigInt value() const;

  friend bool operator==(const CascadeRep&, const CascadeRep&) = default;

 private:
  int level_;
  std::vector<CascadeTerm> terms_;
};

// Greedy-maximal decomposition of m >= 1 at the given level >= 1.
CascadeRep cascade_decompose(const BigInt& m, int level);

// Sum of C(n_i, i-1) over the terms: the least possible number of
// (l-1)-subsets below an l-uniform family of the represented size.
BigInt cascade_shadow(const CascadeRep& rep);

// Sum of C(n_i, i+1): the greatest possible number of (l+1)-subsets whose
// lower shadow stays inside such a family.
BigInt cascade_shade(const CascadeRep& rep);

// Convenience forms that define the operators at m = 0 (both are 0 there,
// where no decomposition exists).
BigInt shadow_of(const BigInt& m, int level);
BigInt shade_of(const BigInt& m, int level);

// The rank-th l-subset of {1..universe} in lexicographic order on
// increasing index sequences; rank 0 is {1, ..., l}.
Subset lex_unrank(const BigInt& rank, int l, int universe);
BigInt lex_rank(const Subset& s);

// The rank-th l-subset of the positive integers in colex order (largest
// elements compared first). Initial segments of this order do not depend
// on any universe bound; the returned subset's universe is its largest
// member.
Subset colex_unrank(const BigInt& rank, int l);
BigInt colex_rank(const Subset& s);

// The first `count` subsets of either order, as a family. The colex
// segment's universe is the largest element that occurs (l when empty).
SubsetFamily lex_initial_segment(const BigInt& count, int l, int universe);
SubsetFamily colex_initial_segment(const BigInt& count, int l);

// All (l-1)-subsets contained in at least one member of an l-uniform
// family. For l = 1 the shadow is {[]} (the empty set lies below every
// singleton), matching the cascade operator's value of 1.
SubsetFamily family_lower_shadow(const SubsetFamily& family);

}  // namespace sigkit
