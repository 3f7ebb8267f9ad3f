#pragma once

#include <cstdint>
#include <vector>

// Internal bitmask helpers shared by the truth-table paths. Masks are
// subsets of {1..n} with component i on bit i-1.

namespace sigkit::detail {

// In-place upward closure over the 2^n lattice: afterwards table[s] != 0
// iff some originally-marked subset lies inside s. O(n * 2^n).
void close_upward(std::vector<std::uint8_t>& table, int n);

// table[s] = 1 iff subset s contains some member as a subset.
std::vector<std::uint8_t> supersets_of_any(const std::vector<std::uint64_t>& members, int n);

// The members with no other member as proper subset, deduplicated, in
// ascending mask order.
std::vector<std::uint64_t> minimal_masks(const std::vector<std::uint64_t>& family, int n);

// Same, for a family given as its 2^n membership table; avoids
// materializing large families as mask lists.
std::vector<std::uint64_t> minimal_masks_in_table(const std::vector<std::uint8_t>& present, int n);

}  // namespace sigkit::detail
