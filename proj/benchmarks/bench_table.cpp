#include <benchmark/benchmark.h>

#include "eseries/coefficients.hpp"

namespace {

// Cost of building the exact table from scratch.  The shared-denominator
// representation makes this superlinear in j_max, which is exactly what we
// want to keep an eye on.
void BM_TableExtend(benchmark::State& state) {
  const long j_max = state.range(0);
  for (auto _ : state) {
    eseries::CoefficientTable table;
    table.extend(j_max);
    benchmark::DoNotOptimize(table.common_denominator());
  }
  state.SetComplexityN(j_max);
}

// Incremental growth of an existing table; staged extension must not redo
// earlier work.
void BM_TableExtendIncremental(benchmark::State& state) {
  const long base = state.range(0);
  for (auto _ : state) {
    state.PauseTiming();
    eseries::CoefficientTable table;
    table.extend(base);
    state.ResumeTiming();
    table.extend(base + 50);
    benchmark::DoNotOptimize(table.common_denominator());
  }
}

// Rendering one coefficient as a float after the exact work is done.
void BM_CoefficientDecimal(benchmark::State& state) {
  static const eseries::CoefficientTable table = [] {
    eseries::CoefficientTable t;
    t.extend(1000);
    return t;
  }();
  const long prec = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(table.coefficient_c(1000, prec));
  }
}

}  // namespace

BENCHMARK(BM_TableExtend)->Arg(100)->Arg(250)->Arg(500)->Arg(1000)
    ->Unit(benchmark::kMillisecond)->Complexity();
BENCHMARK(BM_TableExtendIncremental)->Arg(200)->Arg(500)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoefficientDecimal)->Arg(64)->Arg(256)->Arg(1024);
