#include "sigkit/combinatorics.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <stdexcept>

namespace sigkit {

CascadeRep::CascadeRep(int level, std::vector<CascadeTerm> terms)
    : level_(level), terms_(std::move(terms)) {
  if (level_ < 1) throw std::invalid_argument("cascade level must be positive");
  if (terms_.empty()) throw std::invalid_argument("cascade representation has no terms");
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const CascadeTerm& t = terms_[i];
    int expected_lower = level_ - static_cast<int>(i);
    if (t.lower != expected_lower)
      throw std::invalid_argument("cascade lower indices must descend consecutively from the level");
    if (t.upper < t.lower)
      throw std::invalid_argument("cascade term needs upper index >= lower index");
    if (i > 0 && t.upper >= terms_[i - 1].upper)
      throw std::invalid_argument("cascade upper indices must strictly decrease");
  }
}

BigInt CascadeRep::value() const {
  BigInt sum = 0;
  for (const CascadeTerm& t : terms_)
    sum += binomial(t.upper, static_cast<unsigned long>(t.lower));
  return sum;
}

namespace {

// Largest x with C(x, k) <= target, for target >= 1. Monotone in x, so a
// doubling phase followed by binary search suffices even for huge targets.
BigInt largest_upper_index(const BigInt& target, int k) {
  BigInt lo = k;  // C(k, k) = 1 <= target
  BigInt hi = lo + 1;
  while (binomial(hi, static_cast<unsigned long>(k)) <= target) {
    lo = hi;
    hi *= 2;
  }
  // invariant: C(lo, k) <= target < C(hi, k)
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (binomial(mid, static_cast<unsigned long>(k)) <= target)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

int to_int_element(const BigInt& value) {
  if (!value.fits_sint_p() || value > INT_MAX - 1)
    throw std::overflow_error("subset element does not fit machine integer range");
  return static_cast<int>(value.get_si());
}

}  // namespace

CascadeRep cascade_decompose(const BigInt& m, int level) {
  if (level < 1) throw std::invalid_argument("cascade level must be positive");
  if (m < 1) throw std::invalid_argument("cascade decomposition needs m >= 1");
  std::vector<CascadeTerm> terms;
  BigInt remaining = m;
  for (int i = level; i >= 1 && remaining > 0; --i) {
    BigInt upper = largest_upper_index(remaining, i);
    remaining -= binomial(upper, static_cast<unsigned long>(i));
    terms.push_back(CascadeTerm{std::move(upper), i});
  }
  return CascadeRep(level, std::move(terms));
}

BigInt cascade_shadow(const CascadeRep& rep) {
  BigInt sum = 0;
  for (const CascadeTerm& t : rep.terms())
    sum += binomial(t.upper, static_cast<unsigned long>(t.lower - 1));
  return sum;
}

BigInt cascade_shade(const CascadeRep& rep) {
  BigInt sum = 0;
  for (const CascadeTerm& t : rep.terms())
    sum += binomial(t.upper, static_cast<unsigned long>(t.lower + 1));
  return sum;
}

BigInt shadow_of(const BigInt& m, int level) {
  if (m == 0) return 0;
  return cascade_shadow(cascade_decompose(m, level));
}

BigInt shade_of(const BigInt& m, int level) {
  if (m == 0) return 0;
  return cascade_shade(cascade_decompose(m, level));
}

Subset lex_unrank(const BigInt& rank, int l, int universe) {
  if (l < 1 || l > universe) throw std::invalid_argument("subset size out of range");
  if (rank < 0 || rank >= binomial(static_cast<unsigned long>(universe),
                                   static_cast<unsigned long>(l)))
    throw std::out_of_range("lex rank out of range");
  std::vector<int> members;
  members.reserve(static_cast<std::size_t>(l));
  BigInt remaining = rank;
  int next = 1;
  for (int picked = 0; picked < l; ++picked) {
    // Subsets beginning with `next` and continuing with (l-picked-1) larger
    // elements number C(universe - next, l - picked - 1).
    for (int c = next;; ++c) {
      BigInt block = binomial(static_cast<unsigned long>(universe - c),
                              static_cast<unsigned long>(l - picked - 1));
      if (remaining < block) {
        members.push_back(c);
        next = c + 1;
        break;
      }
      remaining -= block;
    }
  }
  return Subset(universe, std::move(members));
}

BigInt lex_rank(const Subset& s) {
  const int n = s.universe();
  const int l = s.size();
  if (l < 1) throw std::invalid_argument("lex rank of the empty set is undefined");
  BigInt rank = 0;
  int prev = 0;
  for (int picked = 0; picked < l; ++picked) {
    int element = s.members()[static_cast<std::size_t>(picked)];
    for (int c = prev + 1; c < element; ++c)
      rank += binomial(static_cast<unsigned long>(n - c),
                       static_cast<unsigned long>(l - picked - 1));
    prev = element;
  }
  return rank;
}

Subset colex_unrank(const BigInt& rank, int l) {
  if (l < 1) throw std::invalid_argument("subset size must be positive");
  if (rank < 0) throw std::invalid_argument("colex rank must be non-negative");
  std::vector<int> members(static_cast<std::size_t>(l));
  BigInt remaining = rank;
  for (int i = l; i >= 1; --i) {
    // Largest t with C(t, i) <= remaining; the element is t + 1. When the
    // remainder is 0 this collapses to t = i - 1, i.e. element i.
    BigInt t;
    if (remaining == 0) {
      t = i - 1;
    } else {
      t = largest_upper_index(remaining, i);
      remaining -= binomial(t, static_cast<unsigned long>(i));
    }
    members[static_cast<std::size_t>(i - 1)] = to_int_element(t + 1);
  }
  int universe = members.back();
  return Subset(universe, std::move(members));
}

BigInt colex_rank(const Subset& s) {
  BigInt rank = 0;
  int i = 1;
  for (int element : s.members()) {
    rank += binomial(static_cast<unsigned long>(element - 1),
                     static_cast<unsigned long>(i));
    ++i;
  }
  return rank;
}

SubsetFamily lex_initial_segment(const BigInt& count, int l, int universe) {
  if (l < 1 || l > universe) throw std::invalid_argument("subset size out of range");
  if (count < 0 || count > binomial(static_cast<unsigned long>(universe),
                                    static_cast<unsigned long>(l)))
    throw std::out_of_range("segment length exceeds the number of subsets");
  std::vector<Subset> sets;
  if (count > 0) {
    if (count.fits_ulong_p()) sets.reserve(count.get_ui());
    // Iterate combinations in lex order directly; cheaper than unranking
    // each position.
    std::vector<int> current(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) current[static_cast<std::size_t>(i)] = i + 1;
    for (BigInt produced = 0; produced < count; ++produced) {
      sets.emplace_back(universe, current);
      int pos = l - 1;
      while (pos >= 0 && current[static_cast<std::size_t>(pos)] == universe - (l - 1 - pos)) --pos;
      if (pos < 0) break;
      ++current[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < l; ++i)
        current[static_cast<std::size_t>(i)] = current[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  return SubsetFamily(universe, std::move(sets));
}

SubsetFamily colex_initial_segment(const BigInt& count, int l) {
  if (l < 1) throw std::invalid_argument("subset size must be positive");
  if (count < 0) throw std::invalid_argument("segment length must be non-negative");
  std::vector<std::vector<int>> raw;
  for (BigInt r = 0; r < count; ++r) raw.push_back(colex_unrank(r, l).members());
  int universe = l;
  for (const auto& m : raw) universe = std::max(universe, m.back());
  std::vector<Subset> sets;
  sets.reserve(raw.size());
  for (auto& m : raw) sets.emplace_back(universe, std::move(m));
  return SubsetFamily(universe, std::move(sets));
}

SubsetFamily family_lower_shadow(const SubsetFamily& family) {
  if (family.is_empty()) return SubsetFamily::empty_family(family.universe());
  if (!family.uniform_cardinality())
    throw std::invalid_argument("lower shadow needs a uniform family");
  std::set<std::vector<int>> faces;
  for (const Subset& s : family) {
    const auto& m = s.members();
    for (std::size_t drop = 0; drop < m.size(); ++drop) {
      std::vector<int> face;
      face.reserve(m.size() - 1);
      for (std::size_t i = 0; i < m.size(); ++i)
        if (i != drop) face.push_back(m[i]);
      faces.insert(std::move(face));
    }
  }
  std::vector<Subset> sets;
  sets.reserve(faces.size());
  for (const auto& f : faces) sets.emplace_back(family.universe(), f);
  return SubsetFamily(family.universe(), std::move(sets));
}

}  // namespace sigkit
