// Serial reference against the OpenMP kernels on path scans.

#include <benchmark/benchmark.h>

#include "coalition/catalog.hpp"
#include "coalition/census.hpp"
#include "coalition/parallel.hpp"
#include "coalition/solver.hpp"

using namespace coalition;

namespace {

void BM_EnumerateSerial(benchmark::State& state) {
  const Graph g = path_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(coalition_number_enumerate_serial(g).value);
}

void BM_EnumerateParallel(benchmark::State& state) {
  const Graph g = path_graph(static_cast<int>(state.range(0)));
  set_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(coalition_number_enumerate(g).value);
  set_threads(0);
}

void BM_BranchAndBound(benchmark::State& state) {
  const Graph g = path_graph(static_cast<int>(state.range(0)));
  set_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(coalition_number_bnb(g).value);
  set_threads(0);
}

void BM_CensusSerial(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census_path_serial(k).valid_partitions);
}

void BM_CensusParallel(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  set_threads(static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(census_path(k).valid_partitions);
  set_threads(0);
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Arg(10)->Arg(11)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->ArgsProduct({{10, 11, 12}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BranchAndBound)->ArgsProduct({{12, 14, 16}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CensusSerial)->Arg(10)->Arg(11)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->ArgsProduct({{10, 11}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
