#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "sigkit/realizability.hpp"
#include "sigkit/signature.hpp"
#include "sigkit/system.hpp"

using namespace sigkit;

// Every operation is a pure function over immutable values, so hammering
// shared inputs from many threads must reproduce the single-threaded
// results exactly.
TEST_CASE("operations are safe to call concurrently on shared values") {
  const System shared = oracles::make_system(5, {{1, 2}, {1, 3}, {1, 4}, {2, 3, 4}});
  const std::vector<BigRat> candidate = {BigRat(0), BigRat(3, 10), BigRat(2, 5), BigRat(3, 10),
                                         BigRat(0)};
  const CountVector expected_counts = signature_by_counting(shared);
  const System expected_dual = dualize(shared);
  const RealizabilityVerdict expected_verdict = check_candidate(candidate);
  REQUIRE(expected_verdict.realizable);

  std::atomic<int> mismatches{0};
  auto worker = [&] {
    for (int i = 0; i < 40; ++i) {
      if (signature_by_counting(shared) != expected_counts) ++mismatches;
      if (signature_by_permutations(shared) != expected_counts) ++mismatches;
      if (dualize(shared) != expected_dual) ++mismatches;
      const RealizabilityVerdict v = check_candidate(candidate);
      if (!v.realizable || *v.witness != *expected_verdict.witness) ++mismatches;
      if (!kk_check(fvector_from_candidate(SignatureVector(5, candidate))).pass) ++mismatches;
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < 8; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  CHECK(mismatches.load() == 0);
}
