#pragma once

// Test-side reference implementations, deliberately independent of the
// library's computation paths: Pascal-triangle binomials, brute-force
// shadow minima, direct truth-table counting, and naive per-size
// inclusion-exclusion. Frozen expected values in the tests were produced
// by these.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "sigkit/bignum.hpp"
#include "sigkit/subset.hpp"
#include "sigkit/system.hpp"

namespace oracles {

inline sigkit::BigInt pascal_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::vector<sigkit::BigInt> row(static_cast<std::size_t>(n) + 1, sigkit::BigInt(0));
  row[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j >= 1; --j) row[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j - 1)];
  return row[static_cast<std::size_t>(k)];
}

// All l-subsets of {1..n} as bitmasks, in ascending mask order.
inline std::vector<std::uint32_t> all_uniform_masks(int n, int l) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m)
    if (std::popcount(m) == l) out.push_back(m);
  return out;
}

// min over all k-element l-uniform families on {1..n} of the number of
// distinct (l-1)-subsets below some member, for every k at once
// (index k of the result). Exhausts all 2^C(n,l) families with an
// incremental-union sweep, so keep C(n,l) <= 24 or so.
inline std::vector<long> brute_min_shadow_by_family_size(int n, int l) {
  const std::vector<std::uint32_t> level = all_uniform_masks(n, l);
  const std::vector<std::uint32_t> below = all_uniform_masks(n, l - 1);
  if (level.size() > 24) throw std::invalid_argument("level too large for the exhaustive sweep");

  // Dense index of each (l-1)-subset; l = 1 gives the single empty set.
  std::map<std::uint32_t, int> below_index;
  for (std::size_t i = 0; i < below.size(); ++i)
    below_index[below[i]] = static_cast<int>(i);

  // Shadow of one l-subset as a bitmask over (l-1)-subset indices.
  std::vector<std::uint32_t> member_shadow(level.size(), 0);
  for (std::size_t i = 0; i < level.size(); ++i) {
    std::uint32_t m = level[i];
    if (l == 0) continue;
    if (l == 1) {
      member_shadow[i] = 1;  // the empty set
      continue;
    }
    for (std::uint32_t rest = m; rest; rest &= rest - 1)
      member_shadow[i] |= std::uint32_t{1} << below_index.at(m ^ (rest & (~rest + 1)));
  }

  const std::size_t families = std::size_t{1} << level.size();
  std::vector<std::uint32_t> shadow_union(families, 0);
  std::vector<long> best(level.size() + 1, -1);
  best[0] = 0;
  for (std::size_t fam = 1; fam < families; ++fam) {
    const int lowest = std::countr_zero(fam);
    shadow_union[fam] = shadow_union[fam & (fam - 1)] | member_shadow[static_cast<std::size_t>(lowest)];
    const int k = std::popcount(fam);
    const long size = std::popcount(shadow_union[fam]);
    if (best[static_cast<std::size_t>(k)] < 0 || size < best[static_cast<std::size_t>(k)])
      best[static_cast<std::size_t>(k)] = size;
  }
  return best;
}

// Direct truth-table count of cut sets per cardinality: subset-by-subset
// inclusion tests, no lattice propagation.
inline std::vector<long> direct_cut_counts(const std::vector<std::uint64_t>& cut_masks, int n) {
  std::vector<long> counts(static_cast<std::size_t>(n), 0);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    bool is_cut = false;
    for (std::uint64_t m : cut_masks)
      if ((m & s) == m) {
        is_cut = true;
        break;
      }
    if (is_cut && s != 0) ++counts[static_cast<std::size_t>(std::popcount(s) - 1)];
  }
  return counts;
}

// Per-size inclusion-exclusion over the minimal cuts: the count of size-l
// supersets of at least one member.
inline sigkit::BigInt ie_cut_count(const std::vector<std::uint64_t>& cut_masks, int n, int l) {
  sigkit::BigInt total = 0;
  const std::size_t k = cut_masks.size();
  for (std::size_t g = 1; g < (std::size_t{1} << k); ++g) {
    std::uint64_t u = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (g & (std::size_t{1} << i)) u |= cut_masks[i];
    const int used = std::popcount(u);
    if (l < used) continue;
    const sigkit::BigInt ways = pascal_binomial(n - used, l - used);
    if (std::popcount(g) % 2 == 1)
      total += ways;
    else
      total -= ways;
  }
  return total;
}

// Breakdown index of one failure order (0-based component ids) against the
// given minimal-cut masks: the position (1-based) whose failure first
// completes a cut.
inline int breakdown_index(const std::vector<int>& order, const std::vector<std::uint64_t>& cuts) {
  std::uint64_t failed = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    failed |= std::uint64_t{1} << order[i];
    for (std::uint64_t c : cuts)
      if ((c & failed) == c) return static_cast<int>(i) + 1;
  }
  throw std::logic_error("no cut completed; family cannot be a cut family");
}

// Full n! sweep, independent of the library's tallying.
inline std::vector<long> direct_permutation_counts(const std::vector<std::uint64_t>& cuts, int n) {
  std::vector<long> tally(static_cast<std::size_t>(n), 0);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  do {
    ++tally[static_cast<std::size_t>(breakdown_index(order, cuts) - 1)];
  } while (std::next_permutation(order.begin(), order.end()));
  return tally;
}

// All antichain families of non-empty subsets of {1..n}, as mask lists.
inline std::vector<std::vector<std::uint64_t>> brute_antichains(int n) {
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::vector<std::vector<std::uint64_t>> out;
  std::vector<std::uint64_t> chosen;
  auto walk = [&](auto&& self, std::uint64_t next) -> void {
    if (!chosen.empty()) out.push_back(chosen);
    for (std::uint64_t c = next; c < limit; ++c) {
      bool comparable = false;
      for (std::uint64_t s : chosen)
        if ((s & c) == s || (s & c) == c) {
          comparable = true;
          break;
        }
      if (!comparable) {
        chosen.push_back(c);
        self(self, c + 1);
        chosen.pop_back();
      }
    }
  };
  walk(walk, 1);
  return out;
}

// -- random generators (deterministic with the caller's engine) -----------

inline sigkit::Subset random_subset(std::mt19937& rng, int n, int size) {
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<int> members(pool.begin(), pool.begin() + size);
  std::sort(members.begin(), members.end());
  return sigkit::Subset(n, std::move(members));
}

// A non-degenerate random antichain with at most max_sets members: draw a
// handful of random non-empty sets and keep the minimal ones.
inline sigkit::AntichainFamily random_antichain(std::mt19937& rng, int n, int max_sets) {
  std::uniform_int_distribution<int> size_dist(1, n);
  std::uniform_int_distribution<int> count_dist(1, std::max(1, 2 * max_sets));
  while (true) {
    std::set<sigkit::Subset> draws;
    const int wanted = count_dist(rng);
    for (int i = 0; i < wanted; ++i) draws.insert(random_subset(rng, n, size_dist(rng)));
    sigkit::SubsetFamily family(n, std::vector<sigkit::Subset>(draws.begin(), draws.end()));
    sigkit::AntichainFamily minimal = sigkit::extract_minimal(family);
    if (minimal.size() <= static_cast<std::size_t>(max_sets)) return minimal;
  }
}

inline sigkit::AntichainFamily relabel(const sigkit::AntichainFamily& family,
                                       const std::vector<int>& perm) {
  std::vector<sigkit::Subset> sets;
  for (const sigkit::Subset& s : family) {
    std::vector<int> members;
    for (int e : s.members()) members.push_back(perm[static_cast<std::size_t>(e - 1)]);
    std::sort(members.begin(), members.end());
    sets.emplace_back(family.universe(), std::move(members));
  }
  return sigkit::AntichainFamily(sigkit::SubsetFamily(family.universe(), std::move(sets)));
}

// -- small construction helpers -------------------------------------------

inline sigkit::AntichainFamily cuts(int n, const std::vector<std::vector<int>>& sets) {
  std::vector<sigkit::Subset> subsets;
  subsets.reserve(sets.size());
  for (const auto& s : sets) subsets.emplace_back(n, s);
  return sigkit::AntichainFamily(sigkit::SubsetFamily(n, std::move(subsets)));
}

inline sigkit::System make_system(int n, const std::vector<std::vector<int>>& sets) {
  return sigkit::System(cuts(n, sets));
}

inline std::vector<sigkit::BigInt> big(const std::vector<long>& values) {
  std::vector<sigkit::BigInt> out;
  out.reserve(values.size());
  for (long v : values) out.emplace_back(static_cast<long>(v));
  return out;
}

}  // namespace oracles
