#pragma once

#include <cstdint>
#include <vector>

#include "sigkit/bignum.hpp"
#include "sigkit/subset.hpp"

namespace sigkit {

// Truth-table operations (cut counting, dualization, synthesis
// verification) walk all 2^n subsets; beyond this universe size they raise
// capacity_error instead of approximating.
inline constexpr int kMaxEnumerationUniverse = 25;

// A non-empty family of non-empty sets with no proper inclusions between
// members. As the family of minimal cut sets it encodes a working system:
// the full set is always a cut and the empty set never is, so the induced
// structure function is 0 on the empty working set and 1 on the full one.
class AntichainFamily {
 public:
  explicit AntichainFamily(SubsetFamily sets);

  int universe() const noexcept { return sets_.universe(); }
  std::size_t size() const noexcept { return sets_.size(); }
  const SubsetFamily& sets() const noexcept { return sets_; }

  auto begin() const noexcept { return sets_.begin(); }
  auto end() const noexcept { return sets_.end(); }

  friend bool operator==(const AntichainFamily&, const AntichainFamily&) = default;

 private:
  SubsetFamily sets_;
};

// The members of `family` that contain no other member as a proper subset.
AntichainFamily extract_minimal(const SubsetFamily& family);

// A coherent system, canonically represented by its minimal cut sets.
// Equality is equality of the canonical antichains.
class System {
 public:
  explicit System(AntichainFamily minimal_cuts);

  int n() const noexcept { return minimal_cuts_.universe(); }
  const AntichainFamily& minimal_cuts() const noexcept { return minimal_cuts_; }
  const std::vector<std::uint64_t>& cut_masks() const noexcept { return cut_masks_; }

  // The structure function: 1 when the system works with exactly the given
  // components up, i.e. no minimal cut set lies entirely in the failed
  // complement. Monotone non-decreasing in `working`.
  int evaluate(const Subset& working) const;

  friend bool operator==(const System&, const System&) = default;

 private:
  AntichainFamily minimal_cuts_;
  std::vector<std::uint64_t> cut_masks_;
};

// The system whose minimal cut sets are this system's minimal path sets
// (and vice versa). Computed exactly from the 2^n truth table; an
// involution on canonical systems.
System dualize(const System& system);

// Entry l-1 counts all cut sets (minimal or not) of cardinality l, for
// l = 1..n. The last entry is always 1 (the full set) and the counts
// determine the signature through the cumulative identity.
std::vector<BigInt> cut_counts_by_size(const System& system);

}  // namespace sigkit
