#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace sigkit {

// A subset of a component universe {1, ..., n}. Members are kept as a
// strictly increasing 1-based index sequence; a bitmask view is available
// for universes up to 64 elements, which covers every enumeration path.
//
// Ordering is lexicographic on the member sequence (ties broken by
// universe size), which is the canonical order used for families,
// synthesis segments, and all serialized output.
class Subset {
 public:
  Subset(int universe, std::vector<int> members);

  static Subset empty_set(int universe);
  static Subset full_set(int universe);
  static Subset from_mask(int universe, std::uint64_t mask);

  int universe() const noexcept { return universe_; }
  const std::vector<int>& members() const noexcept { return members_; }
  int size() const noexcept { return static_cast<int>(members_.size()); }
  bool is_empty() const noexcept { return members_.empty(); }

  bool contains(int element) const;
  bool subset_of(const Subset& other) const;
  Subset complement() const;
  std::uint64_t mask() const;

  friend bool operator==(const Subset&, const Subset&) = default;
  friend std::strong_ordering operator<=>(const Subset& a, const Subset& b) {
    if (auto c = a.members_ <=> b.members_; c != 0) return c;
    return a.universe_ <=> b.universe_;
  }

 private:
  int universe_;
  std::vector<int> members_;
};

// A duplicate-free collection of subsets over one universe, stored in
// canonical (sorted) order. Mixed cardinalities are allowed.
class SubsetFamily {
 public:
  SubsetFamily(int universe, std::vector<Subset> sets);

  static SubsetFamily empty_family(int universe);

  int universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return sets_.size(); }
  bool is_empty() const noexcept { return sets_.empty(); }
  const std::vector<Subset>& sets() const noexcept { return sets_; }

  auto begin() const noexcept { return sets_.begin(); }
  auto end() const noexcept { return sets_.end(); }

  bool contains(const Subset& s) const;

  // The common cardinality when every member has the same size; nullopt
  // for an empty or mixed-cardinality family.
  std::optional<int> uniform_cardinality() const;

  friend bool operator==(const SubsetFamily&, const SubsetFamily&) = default;

 private:
  int universe_;
  std::vector<Subset> sets_;  // sorted, unique
};

// Closed under taking subsets (the empty set included whenever the family
// is non-empty). This is the defining property of a simplicial complex
// viewed as a set family.
bool is_downward_closed(const SubsetFamily& family);

}  // namespace sigkit
