#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "sigkit/realizability.hpp"
#include "sigkit/signature.hpp"
#include "sigkit/system.hpp"

using namespace sigkit;

namespace {

// A fixed pseudorandom antichain per universe size, so runs are comparable.
System sample_system(int n, int sets) {
  std::mt19937 rng(1234u + static_cast<unsigned>(n));
  std::vector<Subset> draws;
  std::set<std::vector<int>> seen;
  std::uniform_int_distribution<int> size_dist(1, n);
  while (static_cast<int>(draws.size()) < sets) {
    std::vector<int> pool;
    for (int i = 1; i <= n; ++i) pool.push_back(i);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<int> members(pool.begin(), pool.begin() + size_dist(rng));
    std::sort(members.begin(), members.end());
    if (seen.insert(members).second) draws.emplace_back(n, members);
  }
  return System(extract_minimal(SubsetFamily(n, std::move(draws))));
}

}  // namespace

static void BM_cut_counts_by_size(benchmark::State& state) {
  const System system = sample_system(static_cast<int>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(cut_counts_by_size(system));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_cut_counts_by_size)->Arg(10)->Arg(15)->Arg(20)->Arg(22);

static void BM_dualize(benchmark::State& state) {
  const System system = sample_system(static_cast<int>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(dualize(system));
}
BENCHMARK(BM_dualize)->Arg(10)->Arg(15)->Arg(18);

static void BM_signature_by_counting(benchmark::State& state) {
  const System system = sample_system(static_cast<int>(state.range(0)), 12);
  for (auto _ : state) benchmark::DoNotOptimize(signature_by_counting(system));
}
BENCHMARK(BM_signature_by_counting)->Arg(10)->Arg(15)->Arg(20);

static void BM_signature_by_permutations(benchmark::State& state) {
  const System system = sample_system(static_cast<int>(state.range(0)), 8);
  for (auto _ : state) benchmark::DoNotOptimize(signature_by_permutations(system));
}
BENCHMARK(BM_signature_by_permutations)->Arg(7)->Arg(8)->Arg(9);

static void BM_signature_inclusion_exclusion(benchmark::State& state) {
  const System system = sample_system(16, static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(signature_inclusion_exclusion(system.minimal_cuts()));
}
BENCHMARK(BM_signature_inclusion_exclusion)->Arg(8)->Arg(12)->Arg(16);

static void BM_enumerate_achievable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_achievable(n));
}
BENCHMARK(BM_enumerate_achievable)->Arg(4)->Arg(5);

static void BM_check_candidate(benchmark::State& state) {
  // the worked five-component candidate
  const std::vector<BigRat> candidate = {BigRat(0), BigRat(3, 10), BigRat(2, 5), BigRat(3, 10),
                                         BigRat(0)};
  for (auto _ : state) benchmark::DoNotOptimize(check_candidate(candidate));
}
BENCHMARK(BM_check_candidate);

BENCHMARK_MAIN();
