#include "ramanujan/closed_forms.hpp"
#include "ramanujan/elliptic.hpp"
#include "ramanujan/invariants.hpp"

#include <benchmark/benchmark.h>

using namespace ramanujan;

static void BM_alpha_from_nome(benchmark::State& state) {
  PrecisionContext ctx = make_context(static_cast<int>(state.range(0)));
  Nome q(BigReal::parse(ctx, "0.3"), ctx);
  for (auto _ : state) benchmark::DoNotOptimize(alpha_from_nome(q, ctx));
}
BENCHMARK(BM_alpha_from_nome)->Arg(60)->Arg(300);

static void BM_period_ratio(benchmark::State& state) {
  PrecisionContext ctx = make_context(60);
  Modulus m = singular_alpha(9, ctx);
  for (auto _ : state) benchmark::DoNotOptimize(period_ratio(m, ctx));
}
BENCHMARK(BM_period_ratio);

static void BM_class_invariant(benchmark::State& state) {
  PrecisionContext ctx = make_context(60);
  for (auto _ : state) benchmark::DoNotOptimize(G_numeric(5, ctx));
}
BENCHMARK(BM_class_invariant);

static void BM_eval_closed_form(benchmark::State& state) {
  PrecisionContext ctx = make_context(static_cast<int>(state.range(0)));
  const Expr& e = closed_form("alpha_72_unreduced");
  for (auto _ : state) benchmark::DoNotOptimize(eval_expr(e, ctx));
}
BENCHMARK(BM_eval_closed_form)->Arg(60)->Arg(1000);
