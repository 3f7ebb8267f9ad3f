#include "sigkit/realizability.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

#include "mask_ops.hpp"
#include "sigkit/combinatorics.hpp"
#include "sigkit/errors.hpp"

namespace sigkit {

FVector::FVector(int n, std::vector<BigInt> faces) : n_(n), faces_(std::move(faces)) {
  if (n_ < 1) throw std::invalid_argument("face vector needs n >= 1");
  if (faces_.size() != static_cast<std::size_t>(n_) + 1)
    throw std::invalid_argument("face vector must have n + 1 entries");
  if (faces_[0] != 1) throw std::invalid_argument("face vector must start with f_0 = 1");
  for (int l = 1; l <= n_; ++l) {
    const BigInt& f = faces_[static_cast<std::size_t>(l)];
    if (f < 0) throw std::invalid_argument("face counts must be non-negative");
    if (f > binomial(static_cast<unsigned long>(n_), static_cast<unsigned long>(l)))
      throw std::invalid_argument("face count exceeds the number of subsets of its size");
  }
}

namespace {

// Face counts of the candidate, or nullopt with the first level whose
// count is not an integer.
std::optional<FVector> try_fvector(const SignatureVector& candidate, int& bad_level) {
  const int n = candidate.n();
  std::vector<BigInt> faces(static_cast<std::size_t>(n) + 1);
  faces[0] = 1;
  BigRat tail = 0;  // s_{l+1} + ... + s_n, built from the top
  std::vector<BigRat> tails(static_cast<std::size_t>(n));
  for (int l = n; l >= 1; --l) {
    tails[static_cast<std::size_t>(l - 1)] = tail;
    tail += candidate.entries()[static_cast<std::size_t>(l - 1)];
  }
  for (int l = 1; l <= n; ++l) {
    BigRat f = tails[static_cast<std::size_t>(l - 1)] *
               BigRat(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(l)));
    f.canonicalize();
    if (!is_integral(f)) {
      bad_level = l;
      return std::nullopt;
    }
    faces[static_cast<std::size_t>(l)] = f.get_num();
  }
  return FVector(n, std::move(faces));
}

}  // namespace

FVector fvector_from_candidate(const SignatureVector& candidate) {
  int bad_level = 0;
  std::optional<FVector> f = try_fvector(candidate, bad_level);
  if (!f)
    throw non_integer_face_count_error(
        bad_level,
        "candidate implies a non-integral face count at level " + std::to_string(bad_level));
  return *std::move(f);
}

ShadowCheckResult kk_check(const FVector& f) {
  for (int l = f.n(); l >= 1; --l) {
    const BigInt& count = f.at_level(l);
    if (count == 0) continue;
    BigInt shadow = shadow_of(count, l);
    const BigInt& available = f.at_level(l - 1);
    if (shadow > available)
      return ShadowCheckResult{false, l, std::move(shadow), available};
  }
  return ShadowCheckResult{};
}

std::string to_string(RejectionStage stage) {
  switch (stage) {
    case RejectionStage::not_probability_vector: return "not_probability_vector";
    case RejectionStage::non_integer_face_count: return "non_integer_face_count";
    case RejectionStage::shadow_violation: return "shadow_violation";
  }
  return "unknown";
}

namespace {

// Per-level cut segment lengths |Omega^l| = C(n,l) - f_l.
std::vector<BigInt> segment_sizes(const FVector& f) {
  const int n = f.n();
  std::vector<BigInt> sizes(static_cast<std::size_t>(n));
  for (int l = 1; l <= n; ++l)
    sizes[static_cast<std::size_t>(l - 1)] =
        binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(l)) - f.at_level(l);
  return sizes;
}

// Witness construction on the mask lattice: mark the lex-initial segment of
// each level in a membership table, then keep the minimal marked sets.
// Avoids materializing the union as a family, which can approach 2^n
// subsets.
AntichainFamily synthesize_from_fvector(const FVector& f) {
  const int n = f.n();
  if (n > kMaxEnumerationUniverse)
    throw capacity_error("synthesis supports universes up to " +
                         std::to_string(kMaxEnumerationUniverse));
  const std::vector<BigInt> sizes = segment_sizes(f);
  std::vector<std::uint8_t> present(std::size_t{1} << n, 0);
  for (int l = 1; l <= n; ++l) {
    const BigInt& count = sizes[static_cast<std::size_t>(l - 1)];
    if (count == 0) continue;
    unsigned long remaining = count.get_ui();  // bounded by C(25,12)
    std::vector<int> current(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) current[static_cast<std::size_t>(i)] = i + 1;
    while (remaining-- > 0) {
      std::uint64_t mask = 0;
      for (int e : current) mask |= std::uint64_t{1} << (e - 1);
      present[mask] = 1;
      int pos = l - 1;
      while (pos >= 0 && current[static_cast<std::size_t>(pos)] == n - (l - 1 - pos)) --pos;
      if (pos < 0) break;
      ++current[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < l; ++i)
        current[static_cast<std::size_t>(i)] = current[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  std::vector<std::uint64_t> minimal = detail::minimal_masks_in_table(present, n);
  std::vector<Subset> sets;
  sets.reserve(minimal.size());
  for (std::uint64_t m : minimal) sets.push_back(Subset::from_mask(n, m));
  return AntichainFamily(SubsetFamily(n, std::move(sets)));
}

// Expected counts from the face vector: N_l = f_{l-1} (l-1)! (n-l+1)! - f_l l! (n-l)!.
CountVector counts_from_fvector(const FVector& f) {
  const int n = f.n();
  std::vector<BigInt> counts(static_cast<std::size_t>(n));
  for (int l = 1; l <= n; ++l) {
    counts[static_cast<std::size_t>(l - 1)] =
        f.at_level(l - 1) * factorial(static_cast<unsigned long>(l - 1)) *
            factorial(static_cast<unsigned long>(n - l + 1)) -
        f.at_level(l) * factorial(static_cast<unsigned long>(l)) *
            factorial(static_cast<unsigned long>(n - l));
  }
  return CountVector(n, std::move(counts));
}

RealizabilityVerdict reject(RejectionStage stage, int level = 0, BigInt shadow = 0,
                            BigInt bound = 0) {
  RealizabilityVerdict verdict;
  verdict.realizable = false;
  verdict.violation = Violation{stage, level, std::move(shadow), std::move(bound)};
  return verdict;
}

}  // namespace

RealizabilityVerdict check_candidate(const std::vector<BigRat>& candidate) {
  const int n = static_cast<int>(candidate.size());
  if (n < 1) throw std::invalid_argument("candidate must have at least one entry");
  if (n > kMaxEnumerationUniverse)
    throw capacity_error("candidate check supports universes up to " +
                         std::to_string(kMaxEnumerationUniverse));

  std::vector<BigRat> entries = candidate;
  BigRat sum = 0;
  for (BigRat& e : entries) {
    e.canonicalize();
    if (sgn(e) < 0) return reject(RejectionStage::not_probability_vector);
    sum += e;
  }
  if (sum != 1) return reject(RejectionStage::not_probability_vector);
  SignatureVector signature(n, std::move(entries));

  int bad_level = 0;
  std::optional<FVector> f = try_fvector(signature, bad_level);
  if (!f) return reject(RejectionStage::non_integer_face_count, bad_level);

  ShadowCheckResult shadow = kk_check(*f);
  if (!shadow.pass)
    return reject(RejectionStage::shadow_violation, shadow.level, shadow.shadow, shadow.bound);

  AntichainFamily witness = synthesize_from_fvector(*f);
  if (signature_by_counting(System(witness)) != counts_from_fvector(*f))
    throw std::logic_error("synthesized witness does not reproduce the candidate signature");

  RealizabilityVerdict verdict;
  verdict.realizable = true;
  verdict.witness = std::move(witness);
  return verdict;
}

RealizabilityVerdict check_candidate(const CountVector& candidate) {
  const BigInt total = factorial(static_cast<unsigned long>(candidate.n()));
  std::vector<BigRat> entries;
  entries.reserve(candidate.counts().size());
  for (const BigInt& c : candidate.counts()) {
    BigRat e(c, total);
    e.canonicalize();
    entries.push_back(std::move(e));
  }
  return check_candidate(entries);
}

AntichainFamily synthesize(const SignatureVector& candidate) {
  FVector f = fvector_from_candidate(candidate);
  ShadowCheckResult shadow = kk_check(f);
  if (!shadow.pass)
    throw std::invalid_argument("candidate fails the shadow test at level " +
                                std::to_string(shadow.level));
  return synthesize_from_fvector(f);
}

std::vector<SubsetFamily> synthesis_segments(const SignatureVector& candidate) {
  FVector f = fvector_from_candidate(candidate);
  const int n = f.n();
  const std::vector<BigInt> sizes = segment_sizes(f);
  std::vector<SubsetFamily> segments;
  segments.reserve(static_cast<std::size_t>(n));
  for (int l = 1; l <= n; ++l)
    segments.push_back(lex_initial_segment(sizes[static_cast<std::size_t>(l - 1)], l, n));
  return segments;
}

CriterionResult criterion_check(const std::vector<SubsetFamily>& segments) {
  if (segments.empty()) throw std::invalid_argument("criterion needs at least one segment");
  const int universe = segments.front().universe();
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const SubsetFamily& segment = segments[i];
    if (segment.universe() != universe)
      throw std::invalid_argument("criterion segments must share one universe");
    if (!segment.is_empty() && segment.uniform_cardinality() != static_cast<int>(i) + 1)
      throw std::invalid_argument("criterion segment is not uniform at its level");
  }
  for (std::size_t i = 0; i + 1 < segments.size(); ++i) {
    const SubsetFamily& lower = segments[i];
    const SubsetFamily& upper = segments[i + 1];
    for (const Subset& member : lower) {
      for (int x = 1; x <= universe; ++x) {
        if (member.contains(x)) continue;
        std::vector<int> grown = member.members();
        grown.insert(std::upper_bound(grown.begin(), grown.end(), x), x);
        if (!upper.contains(Subset(universe, std::move(grown))))
          return CriterionResult{false, static_cast<int>(i) + 1};
      }
    }
  }
  return CriterionResult{};
}

SubsetFamily build_reverse_lex_complex(const FVector& f) {
  const int n = f.n();
  std::vector<Subset> sets;
  sets.push_back(Subset::empty_set(n));
  for (int l = 1; l <= n; ++l) {
    for (BigInt r = 0; r < f.at_level(l); ++r)
      sets.emplace_back(n, colex_unrank(r, l).members());
  }
  return SubsetFamily(n, std::move(sets));
}

std::vector<AntichainFamily> enumerate_antichain_families(int n) {
  if (n < 1) throw std::invalid_argument("universe size must be positive");
  if (n > kMaxAchievableUniverse)
    throw capacity_error("antichain enumeration supports universes up to " +
                         std::to_string(kMaxAchievableUniverse));
  const std::uint64_t limit = std::uint64_t{1} << n;
  std::vector<AntichainFamily> out;
  std::vector<std::uint64_t> chosen;

  auto emit = [&] {
    std::vector<Subset> sets;
    sets.reserve(chosen.size());
    for (std::uint64_t m : chosen) sets.push_back(Subset::from_mask(n, m));
    out.emplace_back(SubsetFamily(n, std::move(sets)));
  };
  auto walk = [&](auto&& self, std::uint64_t next) -> void {
    if (!chosen.empty()) emit();
    for (std::uint64_t c = next; c < limit; ++c) {
      bool comparable = false;
      for (std::uint64_t s : chosen)
        if ((s & c) == s || (s & c) == c) {
          comparable = true;
          break;
        }
      if (comparable) continue;
      chosen.push_back(c);
      self(self, c + 1);
      chosen.pop_back();
    }
  };
  walk(walk, 1);
  return out;
}

std::vector<CountVector> enumerate_achievable(int n) {
  std::set<CountVector> seen;
  for (const AntichainFamily& family : enumerate_antichain_families(n))
    seen.insert(signature_by_counting(System(family)));
  return std::vector<CountVector>(seen.begin(), seen.end());
}

}  // namespace sigkit
