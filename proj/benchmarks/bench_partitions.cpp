#include <benchmark/benchmark.h>

#include "eseries/partitions.hpp"

namespace {

// Raw visitor throughput: p(40) = 37338 partitions.
void BM_EnumeratePartitions(benchmark::State& state) {
  const long j = state.range(0);
  for (auto _ : state) {
    long seen = 0;
    eseries::enumerate_partitions(j, [&](const eseries::PartitionVector&) { ++seen; });
    benchmark::DoNotOptimize(seen);
  }
}

// Euler's pentagonal recurrence for the whole prefix of counts.
void BM_PartitionCounts(benchmark::State& state) {
  const long j = state.range(0);
  for (auto _ : state) {
    auto counts = eseries::partition_counts_up_to(j);
    benchmark::DoNotOptimize(counts.back());
  }
}

// The independent coefficient construction; dominated by big rational sums.
void BM_AViaPartitions(benchmark::State& state) {
  const long j = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eseries::a_via_partitions(j));
  }
}

}  // namespace

BENCHMARK(BM_EnumeratePartitions)->Arg(20)->Arg(30)->Arg(40);
BENCHMARK(BM_PartitionCounts)->Arg(500)->Arg(2000)->Arg(5000)
    ->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_AViaPartitions)->Arg(15)->Arg(25)->Arg(35)
    ->Unit(benchmark::kMicrosecond);
