#include "sigkit/signature.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sigkit/errors.hpp"

namespace sigkit {

CountVector::CountVector(int n, std::vector<BigInt> counts)
    : n_(n), counts_(std::move(counts)) {
  if (n_ < 1) throw std::invalid_argument("count vector needs n >= 1");
  if (counts_.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("count vector length must equal n");
  BigInt sum = 0;
  for (const BigInt& c : counts_) {
    if (c < 0) throw std::invalid_argument("count vector entries must be non-negative");
    sum += c;
  }
  if (sum != factorial(static_cast<unsigned long>(n_)))
    throw std::invalid_argument("count vector entries must sum to n!");
}

std::strong_ordering CountVector::operator<=>(const CountVector& other) const {
  if (n_ != other.n_) return n_ <=> other.n_;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    int c = cmp(counts_[i], other.counts_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

SignatureVector::SignatureVector(int n, std::vector<BigRat> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < 1) throw std::invalid_argument("signature needs n >= 1");
  if (entries_.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("signature length must equal n");
  BigRat sum = 0;
  for (BigRat& e : entries_) {
    e.canonicalize();
    if (sgn(e) < 0) throw not_probability_vector_error("signature entries must be non-negative");
    sum += e;
  }
  if (sum != 1) throw not_probability_vector_error("signature entries must sum to 1");
}

SignatureVector SignatureVector::from_counts(const CountVector& counts) {
  const BigInt total = factorial(static_cast<unsigned long>(counts.n()));
  std::vector<BigRat> entries;
  entries.reserve(counts.counts().size());
  for (const BigInt& c : counts.counts()) {
    BigRat e(c, total);
    e.canonicalize();
    entries.push_back(std::move(e));
  }
  return SignatureVector(counts.n(), std::move(entries));
}

CountVector SignatureVector::to_counts() const {
  const BigInt total = factorial(static_cast<unsigned long>(n_));
  std::vector<BigInt> counts;
  counts.reserve(entries_.size());
  for (const BigRat& e : entries_) {
    BigRat scaled = e * total;
    scaled.canonicalize();
    if (!is_integral(scaled))
      throw std::invalid_argument("signature entry times n! is not an integer");
    counts.push_back(scaled.get_num());
  }
  return CountVector(n_, std::move(counts));
}

CumulativeVector CumulativeVector::from_signature(const SignatureVector& signature) {
  std::vector<BigRat> sums;
  sums.reserve(signature.entries().size());
  BigRat running = 0;
  for (const BigRat& e : signature.entries()) {
    running += e;
    sums.push_back(running);
  }
  return CumulativeVector(signature.n(), std::move(sums));
}

CumulativeVector CumulativeVector::from_counts(const CountVector& counts) {
  return from_signature(SignatureVector::from_counts(counts));
}

CountVector signature_by_counting(const System& system) {
  const int n = system.n();
  const std::vector<BigInt> cuts = cut_counts_by_size(system);
  std::vector<BigInt> result;
  result.reserve(static_cast<std::size_t>(n));
  const BigInt total = factorial(static_cast<unsigned long>(n));
  BigRat previous = 0;  // S_0
  for (int l = 1; l <= n; ++l) {
    BigRat cumulative(cuts[static_cast<std::size_t>(l - 1)],
                      binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(l)));
    cumulative.canonicalize();
    BigRat step = (cumulative - previous) * total;
    step.canonicalize();
    if (!is_integral(step))
      throw std::logic_error("cut counts produced a non-integral signature entry");
    result.push_back(step.get_num());
    previous = cumulative;
  }
  return CountVector(n, std::move(result));
}

CountVector signature_by_permutations(const System& system) {
  const int n = system.n();
  if (n > kMaxPermutationUniverse)
    throw capacity_error("permutation sweep supports universes up to " +
                         std::to_string(kMaxPermutationUniverse));
  const auto& cuts = system.cut_masks();
  std::vector<unsigned long> tally(static_cast<std::size_t>(n), 0);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  do {
    std::uint64_t failed = 0;
    for (int i = 0; i < n; ++i) {
      failed |= std::uint64_t{1} << order[static_cast<std::size_t>(i)];
      bool down = false;
      for (std::uint64_t cut : cuts)
        if ((cut & ~failed) == 0) {
          down = true;
          break;
        }
      if (down) {
        ++tally[static_cast<std::size_t>(i)];
        break;
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));
  std::vector<BigInt> counts(tally.begin(), tally.end());
  return CountVector(n, std::move(counts));
}

namespace {

void require_level(int n, int l) {
  if (n < 1) throw std::invalid_argument("universe size must be positive");
  if (l < 1 || l > n) throw std::invalid_argument("family level out of range 1..n");
}

}  // namespace

CountVector series_family_counts(int n, int l) {
  require_level(n, l);
  const BigInt scale = factorial(static_cast<unsigned long>(n - l)) *
                       factorial(static_cast<unsigned long>(l));
  std::vector<BigInt> counts;
  counts.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    counts.push_back(scale * binomial(static_cast<unsigned long>(n - i),
                                      static_cast<unsigned long>(l - 1)));
  return CountVector(n, std::move(counts));
}

CountVector dual_family_counts(int n, int l) {
  require_level(n, l);
  const BigInt scale = factorial(static_cast<unsigned long>(n - l)) *
                       factorial(static_cast<unsigned long>(l));
  std::vector<BigInt> counts;
  counts.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    counts.push_back(scale * binomial(static_cast<unsigned long>(i - 1),
                                      static_cast<unsigned long>(l - 1)));
  return CountVector(n, std::move(counts));
}

CountVector signature_inclusion_exclusion(const AntichainFamily& family) {
  const int n = family.universe();
  const std::size_t k = family.size();
  if (k > kMaxInclusionExclusionFamily)
    throw capacity_error("inclusion-exclusion supports families up to " +
                         std::to_string(kMaxInclusionExclusionFamily) + " sets");
  if (n > 64) throw capacity_error("inclusion-exclusion supports universes up to 64");

  std::vector<std::uint64_t> masks;
  masks.reserve(k);
  for (const Subset& s : family) masks.push_back(s.mask());

  // Net signed multiplicity of each union cardinality across all non-empty
  // subfamilies; unions are built incrementally from the subfamily with the
  // lowest member removed.
  std::vector<long> weight(static_cast<std::size_t>(n) + 1, 0);
  const std::size_t subfamilies = std::size_t{1} << k;
  std::vector<std::uint64_t> union_mask(subfamilies, 0);
  for (std::size_t g = 1; g < subfamilies; ++g) {
    const int lowest = std::countr_zero(g);
    union_mask[g] = union_mask[g & (g - 1)] | masks[static_cast<std::size_t>(lowest)];
    const int card = std::popcount(union_mask[g]);
    weight[static_cast<std::size_t>(card)] += (std::popcount(g) % 2 == 1) ? 1 : -1;
  }

  std::vector<BigInt> counts(static_cast<std::size_t>(n), BigInt(0));
  for (int l = 1; l <= n; ++l) {
    if (weight[static_cast<std::size_t>(l)] == 0) continue;
    const CountVector term = dual_family_counts(n, l);
    for (int i = 0; i < n; ++i)
      counts[static_cast<std::size_t>(i)] +=
          BigInt(weight[static_cast<std::size_t>(l)]) * term.counts()[static_cast<std::size_t>(i)];
  }
  return CountVector(n, std::move(counts));
}

CountVector reversed(const CountVector& counts) {
  std::vector<BigInt> flipped(counts.counts().rbegin(), counts.counts().rend());
  return CountVector(counts.n(), std::move(flipped));
}

}  // namespace sigkit
