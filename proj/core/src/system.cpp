#include "sigkit/system.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "mask_ops.hpp"
#include "sigkit/errors.hpp"

namespace sigkit {

namespace {

void require_mask_universe(int n, const char* what) {
  if (n > 64) throw capacity_error(std::string(what) + " supports universes up to 64");
}

void require_enumeration_universe(int n, const char* what) {
  if (n > kMaxEnumerationUniverse)
    throw capacity_error(std::string(what) + " supports universes up to " +
                         std::to_string(kMaxEnumerationUniverse));
}

void validate_antichain(const SubsetFamily& sets) {
  const auto& v = sets.sets();
  if (sets.universe() <= 64) {
    std::vector<std::uint64_t> masks;
    masks.reserve(v.size());
    for (const Subset& s : v) masks.push_back(s.mask());
    if (detail::minimal_masks(masks, sets.universe()).size() != masks.size())
      throw std::invalid_argument("family has a proper inclusion; not an antichain");
  } else {
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j)
        if (i != j && v[i].subset_of(v[j]))
          throw std::invalid_argument("family has a proper inclusion; not an antichain");
  }
}

AntichainFamily family_from_masks(const std::vector<std::uint64_t>& masks, int n) {
  std::vector<Subset> sets;
  sets.reserve(masks.size());
  for (std::uint64_t m : masks) sets.push_back(Subset::from_mask(n, m));
  return AntichainFamily(SubsetFamily(n, std::move(sets)));
}

}  // namespace

AntichainFamily::AntichainFamily(SubsetFamily sets) : sets_(std::move(sets)) {
  if (sets_.is_empty())
    throw std::invalid_argument("minimal cut family must be non-empty");
  for (const Subset& s : sets_)
    if (s.is_empty())
      throw std::invalid_argument("minimal cut family cannot contain the empty set");
  validate_antichain(sets_);
}

AntichainFamily extract_minimal(const SubsetFamily& family) {
  if (family.is_empty())
    throw std::invalid_argument("cannot extract minimal members of an empty family");
  for (const Subset& s : family)
    if (s.is_empty())
      throw std::invalid_argument("family with an empty member has no coherent minimal form");
  require_mask_universe(family.universe(), "extract_minimal");
  std::vector<std::uint64_t> masks;
  masks.reserve(family.size());
  for (const Subset& s : family) masks.push_back(s.mask());
  return family_from_masks(detail::minimal_masks(masks, family.universe()), family.universe());
}

System::System(AntichainFamily minimal_cuts) : minimal_cuts_(std::move(minimal_cuts)) {
  require_mask_universe(minimal_cuts_.universe(), "System");
  cut_masks_.reserve(minimal_cuts_.size());
  for (const Subset& s : minimal_cuts_) cut_masks_.push_back(s.mask());
}

int System::evaluate(const Subset& working) const {
  if (working.universe() != n())
    throw std::invalid_argument("working set universe does not match the system");
  const std::uint64_t working_mask = working.mask();
  for (std::uint64_t cut : cut_masks_)
    if ((cut & working_mask) == 0) return 0;  // cut lies in the failed complement
  return 1;
}

System dualize(const System& system) {
  const int n = system.n();
  require_enumeration_universe(n, "dualize");
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  // down[f] = 1 iff failing exactly the components in f brings the system
  // down. Path sets are the complements of the non-down sets; minimal path
  // sets of this system are the minimal cut sets of the dual.
  std::vector<std::uint8_t> down = detail::supersets_of_any(system.cut_masks(), n);
  std::vector<std::uint64_t> minimal_paths;
  for (std::uint64_t p = 0; p <= full; ++p) {
    if (down[full ^ p]) continue;  // p is not a path set
    bool minimal = true;
    for (std::uint64_t rest = p; rest; rest &= rest - 1) {
      std::uint64_t q = p ^ (rest & (~rest + 1));
      if (!down[full ^ q]) {
        minimal = false;
        break;
      }
    }
    if (minimal) minimal_paths.push_back(p);
  }
  return System(family_from_masks(minimal_paths, n));
}

std::vector<BigInt> cut_counts_by_size(const System& system) {
  const int n = system.n();
  require_enumeration_universe(n, "cut_counts_by_size");
  std::vector<std::uint8_t> down = detail::supersets_of_any(system.cut_masks(), n);
  std::vector<unsigned long> tally(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t s = 0; s < down.size(); ++s)
    if (down[s]) ++tally[static_cast<std::size_t>(std::popcount(s))];
  std::vector<BigInt> counts;
  counts.reserve(static_cast<std::size_t>(n));
  for (int l = 1; l <= n; ++l) counts.emplace_back(tally[static_cast<std::size_t>(l)]);
  return counts;
}

}  // namespace sigkit
