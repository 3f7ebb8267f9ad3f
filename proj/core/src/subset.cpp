#include "sigkit/subset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sigkit {

Subset::Subset(int universe, std::vector<int> members)
    : universe_(universe), members_(std::move(members)) {
  if (universe < 1) throw std::invalid_argument("subset universe must be positive");
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] < 1 || members_[i] > universe_)
      throw std::invalid_argument("subset member out of universe range");
    if (i > 0 && members_[i] <= members_[i - 1])
      throw std::invalid_argument("subset members must be strictly increasing");
  }
}

Subset Subset::empty_set(int universe) { return Subset(universe, {}); }

Subset Subset::full_set(int universe) {
  std::vector<int> all(static_cast<std::size_t>(universe));
  for (int i = 0; i < universe; ++i) all[static_cast<std::size_t>(i)] = i + 1;
  return Subset(universe, std::move(all));
}

Subset Subset::from_mask(int universe, std::uint64_t mask) {
  if (universe < 1 || universe > 64)
    throw std::invalid_argument("mask construction needs universe in 1..64");
  if (universe < 64 && (mask >> universe) != 0)
    throw std::invalid_argument("mask has bits outside the universe");
  std::vector<int> members;
  for (int i = 0; i < universe; ++i)
    if (mask & (std::uint64_t{1} << i)) members.push_back(i + 1);
  return Subset(universe, std::move(members));
}

bool Subset::contains(int element) const {
  return std::binary_search(members_.begin(), members_.end(), element);
}

bool Subset::subset_of(const Subset& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

Subset Subset::complement() const {
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(universe_ - size()));
  auto it = members_.begin();
  for (int i = 1; i <= universe_; ++i) {
    if (it != members_.end() && *it == i) {
      ++it;
    } else {
      rest.push_back(i);
    }
  }
  return Subset(universe_, std::move(rest));
}

std::uint64_t Subset::mask() const {
  if (universe_ > 64) throw std::invalid_argument("universe too large for a 64-bit mask");
  std::uint64_t m = 0;
  for (int e : members_) m |= std::uint64_t{1} << (e - 1);
  return m;
}

SubsetFamily::SubsetFamily(int universe, std::vector<Subset> sets)
    : universe_(universe), sets_(std::move(sets)) {
  if (universe < 1) throw std::invalid_argument("family universe must be positive");
  for (const Subset& s : sets_)
    if (s.universe() != universe_)
      throw std::invalid_argument("family members must share one universe");
  std::sort(sets_.begin(), sets_.end());
  if (std::adjacent_find(sets_.begin(), sets_.end()) != sets_.end())
    throw std::invalid_argument("family contains duplicate members");
}

SubsetFamily SubsetFamily::empty_family(int universe) {
  return SubsetFamily(universe, {});
}

bool SubsetFamily::contains(const Subset& s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s);
}

std::optional<int> SubsetFamily::uniform_cardinality() const {
  if (sets_.empty()) return std::nullopt;
  int l = sets_.front().size();
  for (const Subset& s : sets_)
    if (s.size() != l) return std::nullopt;
  return l;
}

bool is_downward_closed(const SubsetFamily& family) {
  std::set<std::vector<int>> present;
  for (const Subset& s : family) present.insert(s.members());
  for (const Subset& s : family) {
    const auto& m = s.members();
    for (std::size_t drop = 0; drop < m.size(); ++drop) {
      std::vector<int> face;
      face.reserve(m.size() - 1);
      for (std::size_t i = 0; i < m.size(); ++i)
        if (i != drop) face.push_back(m[i]);
      if (!present.count(face)) return false;
    }
  }
  return true;
}

}  // namespace sigkit
