// Acceptance suite: one check per release criterion, each with an explicit
// time budget. Prints one PASS/FAIL line per criterion and exits with the
// number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sigkit/combinatorics.hpp"
#include "sigkit/io.hpp"
#include "sigkit/realizability.hpp"
#include "sigkit/signature.hpp"
#include "sigkit/system.hpp"

using namespace sigkit;

namespace {

struct Criterion {
  std::string name;
  double budget_ms;
  std::function<bool(std::string&)> run;
};

bool expect(bool condition, std::string& detail, const std::string& message) {
  if (!condition && detail.empty()) detail = message;
  return condition;
}

CountVector counts_of(const std::vector<long>& v) {
  return CountVector(static_cast<int>(v.size()), oracles::big(v));
}

// ---- 1. closed-form table ------------------------------------------------

bool series_table(std::string& detail) {
  const std::vector<std::vector<long>> expected = {
      {24, 24, 24, 24, 24},
      {48, 36, 24, 12, 0},
      {72, 36, 12, 0, 0},
      {96, 24, 0, 0, 0},
      {120, 0, 0, 0, 0},
  };
  bool ok = true;
  for (int l = 1; l <= 5; ++l)
    ok &= expect(series_family_counts(5, l) == counts_of(expected[static_cast<std::size_t>(l - 1)]),
                 detail, "series closed form differs at l=" + std::to_string(l));
  return ok;
}

// ---- 2. one worked signature, three ways ----------------------------------

bool worked_signature(std::string& detail) {
  const System system = oracles::make_system(5, {{1, 2}, {1, 3}});
  const CountVector expected = counts_of({0, 24, 36, 36, 24});
  bool ok = true;
  ok &= expect(signature_by_counting(system) == expected, detail, "counting method differs");
  ok &= expect(signature_by_permutations(system) == expected, detail, "permutation method differs");
  ok &= expect(signature_inclusion_exclusion(system.minimal_cuts()) == expected, detail,
               "inclusion-exclusion method differs");
  const SignatureVector normalized = SignatureVector::from_counts(expected);
  const std::vector<BigRat> fractions = {BigRat(0), BigRat(1, 5), BigRat(3, 10), BigRat(3, 10),
                                         BigRat(1, 5)};
  ok &= expect(normalized.entries() == fractions, detail, "normalization differs");
  return ok;
}

// ---- 3. one worked synthesis ----------------------------------------------

bool worked_synthesis(std::string& detail) {
  const RealizabilityVerdict verdict = check_candidate(
      {BigRat(0), BigRat(3, 10), BigRat(2, 5), BigRat(3, 10), BigRat(0)});
  bool ok = expect(verdict.realizable, detail, "candidate was rejected");
  if (!ok) return false;
  ok &= expect(*verdict.witness == oracles::cuts(5, {{1, 2}, {1, 3}, {1, 4}, {2, 3, 4}}), detail,
               "witness differs from the canonical family");
  ok &= expect(signature_by_counting(System(*verdict.witness)) == counts_of({0, 36, 48, 36, 0}),
               detail, "witness signature differs");
  return ok;
}

// ---- 4. accept-set equals the exhaustive achievable set --------------------

bool achievable_equivalence(std::string& detail) {
  bool ok = true;
  long swept = 0, fully_checked = 0, sampled_total = 0;
  for (int n = 1; n <= 5; ++n) {
    const std::vector<CountVector> achievable = enumerate_achievable(n);
    const std::set<CountVector> achievable_set(achievable.begin(), achievable.end());
    for (const CountVector& v : achievable)
      ok &= expect(check_candidate(v).realizable, detail,
                   "achievable vector rejected at n=" + std::to_string(n));

    const long total = static_cast<long>(factorial(static_cast<unsigned long>(n)).get_si());
    std::set<CountVector> accepted;
    std::vector<long> counts(static_cast<std::size_t>(n), 0);

    // cumulative divisors (n-l)! l! for the face-count integrality test
    std::vector<long> divisor(static_cast<std::size_t>(n));
    for (int l = 1; l <= n; ++l) {
      const BigInt d = factorial(static_cast<unsigned long>(n - l)) *
                       factorial(static_cast<unsigned long>(l));
      divisor[static_cast<std::size_t>(l - 1)] = static_cast<long>(d.get_si());
    }

    long sampled_rejects = 0, reject_counter = 0;
    auto leaf = [&]() {
      ++swept;
      long running = 0;
      bool integral = true;
      for (int l = 1; l <= n; ++l) {
        running += counts[static_cast<std::size_t>(l - 1)];
        if (running % divisor[static_cast<std::size_t>(l - 1)] != 0) {
          integral = false;
          break;
        }
      }
      const bool small_domain = n <= 4;
      if (integral || small_domain) {
        ++fully_checked;
        const CountVector v(n, oracles::big(counts));
        if (check_candidate(v).realizable) accepted.insert(v);
        if (!integral && small_domain)
          ok &= expect(!check_candidate(v).realizable, detail, "prefilter mismatch");
        return;
      }
      // Non-integral cumulative counts can never be realized; spot-check a
      // deterministic sample of them against the full pipeline.
      if (++reject_counter % 97 == 0 && sampled_rejects < 100000) {
        ++sampled_rejects;
        const CountVector v(n, oracles::big(counts));
        ok &= expect(!check_candidate(v).realizable, detail,
                     "full check accepted a prefiltered candidate at n=" + std::to_string(n));
      }
    };
    auto sweep = [&](auto&& self, int position, long remaining) -> void {
      if (position == n - 1) {
        counts[static_cast<std::size_t>(position)] = remaining;
        leaf();
        return;
      }
      for (long c = 0; c <= remaining; ++c) {
        counts[static_cast<std::size_t>(position)] = c;
        self(self, position + 1, remaining - c);
      }
    };
    sweep(sweep, 0, total);
    sampled_total += sampled_rejects;
    ok &= expect(accepted == achievable_set, detail,
                 "accepted set differs from the achievable set at n=" + std::to_string(n));
  }
  if (ok && detail.empty())
    detail = "swept " + std::to_string(swept) + " count vectors, " +
             std::to_string(fully_checked) + " fully checked, " +
             std::to_string(sampled_total) + " prefiltered rejects cross-checked";
  return ok;
}

// ---- 5. minimum shadow equals the cascade bound -----------------------------

bool minimum_shadow(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    for (int l = 1; l <= std::min(n, 3); ++l) {
      const std::vector<long> best = oracles::brute_min_shadow_by_family_size(n, l);
      for (std::size_t k = 1; k < best.size(); ++k)
        ok &= expect(shadow_of(static_cast<long>(k), l) == best[k], detail,
                     "cascade bound differs at n=" + std::to_string(n) +
                         " l=" + std::to_string(l) + " k=" + std::to_string(k));
    }
  }
  return ok;
}

// ---- 6. three-way equivalence of the face-count test ------------------------

bool complex_equivalence(std::string& detail) {
  std::mt19937 rng(60001);
  bool ok = true;
  for (int round = 0; round < 500; ++round) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<BigInt> faces(static_cast<std::size_t>(n) + 1);
    faces[0] = 1;
    for (int l = 1; l <= n; ++l) {
      const unsigned long top =
          binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(l)).get_ui();
      faces[static_cast<std::size_t>(l)] = static_cast<long>(rng() % (top + 1));
    }
    const FVector f(n, std::move(faces));
    ok &= expect(kk_check(f).pass == is_downward_closed(build_reverse_lex_complex(f)), detail,
                 "shadow test and closure disagree");
  }
  for (int round = 0; round < 100; ++round) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const System system(oracles::random_antichain(rng, n, 10));
    const std::vector<BigInt> cut_counts = cut_counts_by_size(system);
    std::vector<BigInt> faces(static_cast<std::size_t>(n) + 1);
    faces[0] = 1;
    for (int l = 1; l <= n; ++l)
      faces[static_cast<std::size_t>(l)] =
          binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(l)) -
          cut_counts[static_cast<std::size_t>(l - 1)];
    ok &= expect(kk_check(FVector(n, std::move(faces))).pass, detail,
                 "a real system's face vector failed the shadow test");
  }
  return ok;
}

// ---- 7. duality -------------------------------------------------------------

bool duality(std::string& detail) {
  std::mt19937 rng(70001);
  bool ok = true;
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const System system(oracles::random_antichain(rng, n, 10));
    const System dual = dualize(system);
    ok &= expect(dualize(dual) == system, detail, "dualize is not an involution");
    ok &= expect(signature_by_counting(dual) == reversed(signature_by_counting(system)), detail,
                 "dual signature is not the reversal");
  }
  return ok;
}

// ---- 8. method agreement ------------------------------------------------------

bool method_agreement(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 4; ++n)
    for (const auto& masks : oracles::brute_antichains(n)) {
      std::vector<Subset> sets;
      for (std::uint64_t m : masks) sets.push_back(Subset::from_mask(n, m));
      const System system{AntichainFamily(SubsetFamily(n, std::move(sets)))};
      ok &= expect(signature_by_counting(system) == signature_by_permutations(system), detail,
                   "counting vs permutations differ at n=" + std::to_string(n));
    }
  std::mt19937 rng(80001);
  for (int round = 0; round < 100; ++round) {
    const int n = 6 + static_cast<int>(rng() % 2);  // 6..7
    const System system(oracles::random_antichain(rng, n, 12));
    ok &= expect(signature_by_counting(system) == signature_by_permutations(system), detail,
                 "counting vs permutations differ on a random system");
  }
  for (int round = 0; round < 100; ++round) {
    const int n = 1 + static_cast<int>(rng() % 10);  // 1..10
    const System system(oracles::random_antichain(rng, n, 12));
    ok &= expect(
        signature_by_counting(system) == signature_inclusion_exclusion(system.minimal_cuts()),
        detail, "counting vs inclusion-exclusion differ on a random antichain");
  }
  return ok;
}

// ---- 9. reversal symmetry of realizability -----------------------------------

bool reversal_symmetry(std::string& detail) {
  std::mt19937 rng(90001);
  bool ok = true;
  for (int round = 0; round < 500; ++round) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const long total = static_cast<long>(factorial(static_cast<unsigned long>(n)).get_si());
    std::vector<long> counts(static_cast<std::size_t>(n), 0);
    if (round % 2 == 0) {
      // random composition of n!
      for (int i = 0; i < n - 1; ++i)
        counts[static_cast<std::size_t>(i)] = static_cast<long>(rng() % (total + 1));
      counts.back() = total;
      std::sort(counts.begin(), counts.end());
      for (int i = n - 1; i >= 1; --i)
        counts[static_cast<std::size_t>(i)] -= counts[static_cast<std::size_t>(i - 1)];
    } else {
      // signature of a random system: exercises the accepting path too
      const CountVector sig =
          signature_by_counting(System(oracles::random_antichain(rng, n, 10)));
      for (int i = 0; i < n; ++i)
        counts[static_cast<std::size_t>(i)] =
            static_cast<long>(sig.counts()[static_cast<std::size_t>(i)].get_si());
    }
    const CountVector v(n, oracles::big(counts));
    const std::vector<long> flipped(counts.rbegin(), counts.rend());
    const CountVector r(n, oracles::big(flipped));
    ok &= expect(check_candidate(v).realizable == check_candidate(r).realizable, detail,
                 "realizability differs under reversal");
  }
  return ok;
}

}  // namespace

int main() {
  // Touch the allocator and the library once so the tighter budgets time
  // the operations, not first-use paging.
  {
    volatile bool warm = series_family_counts(5, 2) == counts_of({48, 36, 24, 12, 0});
    (void)warm;
  }

  const std::vector<Criterion> criteria = {
      {"series closed-form table at n=5", 1.0, series_table},
      {"worked signature by all three methods", 1000.0, worked_signature},
      {"worked synthesis with canonical witness", 1000.0, worked_synthesis},
      {"accept-set equals achievable set for n=1..5", 60000.0, achievable_equivalence},
      {"exhaustive minimum shadow equals cascade bound (n<=6, l<=3)", 60000.0, minimum_shadow},
      {"face-count test equivalences (500 random + harvested)", 10000.0, complex_equivalence},
      {"duality involution and signature reversal (200 systems)", 30000.0, duality},
      {"method agreement (exhaustive n<=4, randomized n<=10)", 120000.0, method_agreement},
      {"reversal symmetry of realizability (500 vectors)", 30000.0, reversal_symmetry},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const Criterion& c = criteria[i];
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (elapsed_ms > c.budget_ms) {
      ok = false;
      if (detail.empty())
        detail = "exceeded budget of " + std::to_string(c.budget_ms) + " ms";
    }
    std::printf("[%s] %zu. %s (%.2f ms, budget %.0f ms)%s%s\n", ok ? "PASS" : "FAIL", i + 1,
                c.name.c_str(), elapsed_ms, c.budget_ms, detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!ok) ++failures;
  }
  if (failures == 0)
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}
