#include <benchmark/benchmark.h>

#include "eseries/bigcomplex.hpp"
#include "eseries/bigreal.hpp"
#include "eseries/quadrature.hpp"

namespace {

using eseries::BigComplex;
using eseries::BigReal;

// One integrand evaluation off the real axis at growing precision.
void BM_FEval(benchmark::State& state) {
  const long prec = state.range(0);
  const BigComplex z(BigReal::parse("0.3", prec), BigReal::parse("0.4", prec));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eseries::f_eval(z, prec));
  }
}

// Full trapezoidal pass at a fixed node count; linear in N by construction.
void BM_CauchyFixedNodes(benchmark::State& state) {
  const long nodes = state.range(0);
  const eseries::ContourSpec spec{BigReal::parse("0.5", 192), nodes, 192};
  for (auto _ : state) {
    benchmark::DoNotOptimize(eseries::cauchy_coefficient(10, spec));
  }
  state.SetComplexityN(nodes);
}

// Adaptive driver end to end, including the doubling ladder.
void BM_AdaptiveCauchy(benchmark::State& state) {
  const long j = state.range(0);
  const BigReal radius = BigReal::parse("0.5", 192);
  const BigReal tol = BigReal::parse("1e-30", 192);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eseries::adaptive_cauchy(j, radius, tol, 192));
  }
}

}  // namespace

BENCHMARK(BM_FEval)->Arg(128)->Arg(512)->Arg(2048);
BENCHMARK(BM_CauchyFixedNodes)->Arg(64)->Arg(128)->Arg(256)->Arg(512)
    ->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);
BENCHMARK(BM_AdaptiveCauchy)->Arg(0)->Arg(10)->Arg(25)
    ->Unit(benchmark::kMillisecond);
