#include <benchmark/benchmark.h>

#include "degseq/identities.hpp"
#include "degseq/sequences.hpp"
#include "degseq/series.hpp"
#include "degseq/stirling.hpp"

using degseq::ArgumentMode;
using degseq::Rational;
using degseq::TruncSeries;

static void BM_series_mul_symbolic(benchmark::State& state) {
  int order = static_cast<int>(state.range(0));
  TruncSeries a = degseq::gf_degenerate_exp(order, true);
  TruncSeries b = degseq::gf_binomial_pow_x(order);
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_series_mul_symbolic)->Arg(16)->Arg(32);

static void BM_series_reciprocal(benchmark::State& state) {
  int order = static_cast<int>(state.range(0));
  TruncSeries kernel =
      (degseq::gf_degenerate_exp(order + 1, false) - TruncSeries::constant(order + 1, Rational(1))).shift_div(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernel.reciprocal());
  }
}
BENCHMARK(BM_series_reciprocal)->Arg(16)->Arg(32);

static void BM_series_compose(benchmark::State& state) {
  int order = static_cast<int>(state.range(0));
  TruncSeries outer = degseq::gf_polyexponential(2, order);
  TruncSeries inner = degseq::gf_log1p(order).scaled(degseq::BiPoly::lambda());
  for (auto _ : state) {
    benchmark::DoNotOptimize(outer.compose(inner));
  }
}
BENCHMARK(BM_series_compose)->Arg(16)->Arg(32);

static void BM_stirling_first_degenerate(benchmark::State& state) {
  int nmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(degseq::StirlingTable::first_degenerate(nmax));
  }
}
BENCHMARK(BM_stirling_first_degenerate)->Arg(16)->Arg(32);

static void BM_degen_bernoulli_poly(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(degseq::degen_bernoulli(4, 12, ArgumentMode::polynomial));
  }
}
BENCHMARK(BM_degen_bernoulli_poly);

static void BM_run_all_default_grid(benchmark::State& state) {
  degseq::CheckConfig cfg;
  for (auto _ : state) {
    benchmark::DoNotOptimize(degseq::run_all(cfg));
  }
}
BENCHMARK(BM_run_all_default_grid)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
