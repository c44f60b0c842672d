#include "ramanujan/qseries.hpp"
#include "ramanujan/singular_cf.hpp"

#include <benchmark/benchmark.h>

using namespace ramanujan;

static void BM_phi(benchmark::State& state) {
  PrecisionContext ctx = make_context(static_cast<int>(state.range(0)));
  Nome q(BigReal::parse(ctx, "0.4"), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(phi(q, ctx));
}
BENCHMARK(BM_phi)->Arg(50)->Arg(200)->Arg(1000);

static void BM_f_neg(benchmark::State& state) {
  PrecisionContext ctx = make_context(static_cast<int>(state.range(0)));
  Nome q(BigReal::parse(ctx, "0.4"), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(f_neg(q, ctx));
}
BENCHMARK(BM_f_neg)->Arg(50)->Arg(200)->Arg(1000);

static void BM_chi_product(benchmark::State& state) {
  PrecisionContext ctx = make_context(static_cast<int>(state.range(0)));
  Nome q(BigReal::parse(ctx, "0.4"), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(chi(q, ctx));
}
BENCHMARK(BM_chi_product)->Arg(50)->Arg(200);

static void BM_s1_continued_fraction(benchmark::State& state) {
  PrecisionContext ctx = make_context(60);
  Nome q(BigReal::parse(ctx, "0.1"), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(s1_cf(q, 1 << 16, ctx));
}
BENCHMARK(BM_s1_continued_fraction);
