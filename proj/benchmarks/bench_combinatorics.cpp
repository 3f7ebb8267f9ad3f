#include <benchmark/benchmark.h>

#include "sigkit/combinatorics.hpp"

using namespace sigkit;

static void BM_binomial_small(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(binomial(30, 15));
}
BENCHMARK(BM_binomial_small);

static void BM_binomial_large(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(binomial(300, 150));
}
BENCHMARK(BM_binomial_large);

static void BM_cascade_decompose(benchmark::State& state) {
  const long m = state.range(0);
  const int level = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(cascade_decompose(m, level));
}
BENCHMARK(BM_cascade_decompose)->Args({18, 4})->Args({3000, 8})->Args({1000000, 12});

static void BM_shadow_of(benchmark::State& state) {
  const long m = state.range(0);
  const int level = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(shadow_of(m, level));
}
BENCHMARK(BM_shadow_of)->Args({3000, 8})->Args({1000000, 12});

static void BM_lex_unrank(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int l = n / 2;
  const BigInt last = binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(l)) - 1;
  for (auto _ : state) benchmark::DoNotOptimize(lex_unrank(last, l, n));
}
BENCHMARK(BM_lex_unrank)->Arg(10)->Arg(20)->Arg(40);

static void BM_colex_unrank(benchmark::State& state) {
  const long rank = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(colex_unrank(rank, 6));
}
BENCHMARK(BM_colex_unrank)->Arg(1000)->Arg(1000000);

static void BM_family_lower_shadow(benchmark::State& state) {
  const SubsetFamily segment = colex_initial_segment(state.range(0), 4);
  for (auto _ : state) benchmark::DoNotOptimize(family_lower_shadow(segment));
}
BENCHMARK(BM_family_lower_shadow)->Arg(18)->Arg(200);

BENCHMARK_MAIN();
