#include <benchmark/benchmark.h>

#include "stirling/bernoulli.hpp"
#include "stirling/bounds.hpp"
#include "stirling/expansions.hpp"
#include "stirling/oracle.hpp"
#include "stirling/series.hpp"

using namespace stirling;

// Fresh cache each iteration so the recurrence itself is timed.
static void BM_BernoulliTable(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    BernoulliCache cache;
    benchmark::DoNotOptimize(cache.bernoulli(k));
  }
  state.SetComplexityN(k);
}
BENCHMARK(BM_BernoulliTable)->RangeMultiplier(2)->Range(32, 512)->Complexity();

static void BM_OptimalTruncation(benchmark::State& state) {
  PrecisionCtx ctx(state.range(0));
  BigFloat z(10, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(optimal_truncation(z, ctx));
}
BENCHMARK(BM_OptimalTruncation)->Arg(128)->Arg(256)->Arg(512);

static void BM_Binet2(benchmark::State& state) {
  PrecisionCtx ctx(state.range(0));
  BigFloat z = BigFloat::from_decimal("2.5", ctx);
  for (auto _ : state) benchmark::DoNotOptimize(lngamma_binet2(z, ctx));
}
BENCHMARK(BM_Binet2)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_LnFactorialExact(benchmark::State& state) {
  PrecisionCtx ctx(256);
  for (auto _ : state) benchmark::DoNotOptimize(ln_factorial_exact(state.range(0), ctx));
}
BENCHMARK(BM_LnFactorialExact)->RangeMultiplier(10)->Range(10, 100000);

static void BM_BoundSurvey(benchmark::State& state) {
  PrecisionCtx ctx(128);
  for (auto _ : state) benchmark::DoNotOptimize(survey_bound(BoundFamily::robbins, 1, state.range(0), ctx));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BoundSurvey)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_MarsagliaCoeffs(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(marsaglia_coeffs(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MarsagliaCoeffs)->Arg(10)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
