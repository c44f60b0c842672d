#include "ramanujan/closed_forms.hpp"
#include "ramanujan/modeq.hpp"

#include <benchmark/benchmark.h>

using namespace ramanujan;

static void BM_identity_suite(benchmark::State& state) {
  PrecisionContext ctx = make_context(static_cast<int>(state.range(0)));
  auto ids = all_identity_ids();
  auto grid = canonical_grid(ctx);
  for (auto _ : state) benchmark::DoNotOptimize(verify_suite(ids, grid, ctx));
}
BENCHMARK(BM_identity_suite)->Arg(60)->Arg(80)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_closed_forms(benchmark::State& state) {
  PrecisionContext ctx = make_context(60);
  for (auto _ : state) benchmark::DoNotOptimize(check_all_closed_forms(ctx));
}
BENCHMARK(BM_closed_forms)->Unit(benchmark::kMillisecond);

static void BM_factor_limits(benchmark::State& state) {
  PrecisionContext ctx = make_context(60);
  Nome q(BigReal::parse(ctx, "0.01"), ctx);
  for (auto _ : state)
    for (const char* t : {"T3.1", "T3.2", "T3.3", "T3.4"})
      benchmark::DoNotOptimize(factor_limit_check(t, q, ctx));
}
BENCHMARK(BM_factor_limits)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
