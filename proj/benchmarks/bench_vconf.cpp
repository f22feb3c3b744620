#include <benchmark/benchmark.h>

#include <vector>

#include "vconf/betti.hpp"
#include "vconf/cluster_partitions.hpp"
#include "vconf/enumeration.hpp"
#include "vconf/geometry.hpp"
#include "vconf/oracles.hpp"

using namespace vconf;

static void BM_CountRayPartitions(benchmark::State& state) {
  const ClusterShape shape({2, 2, 2});
  const int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_ray_partitions(shape, jobs));
  state.SetItemsProcessed(state.iterations() * 720);
}
BENCHMARK(BM_CountRayPartitions)->Arg(1)->Arg(2)->Arg(4)->UseRealTime();

static void BM_BettiTable(benchmark::State& state) {
  const ClusterShape shape({3, 3});
  BettiOptions options;
  options.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(shape, 1, 1, std::nullopt, options));
}
BENCHMARK(BM_BettiTable)->Arg(1)->Arg(4)->UseRealTime();

static void BM_ArnoldTable(benchmark::State& state) {
  const ClusterShape shape(std::vector<int>(static_cast<std::size_t>(state.range(0)), 1));
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(shape, 0, 2));
}
BENCHMARK(BM_ArnoldTable)->DenseRange(4, 7);

static void BM_GreedyRayPartition(benchmark::State& state) {
  RandomConfigGenerator gen(42);
  std::vector<VerticalConfiguration> configs;
  for (int i = 0; i < 64; ++i) configs.push_back(gen.next());
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(greedy_ray_partition(configs[i++ % configs.size()]));
}
BENCHMARK(BM_GreedyRayPartition);

static void BM_Dexterity(benchmark::State& state) {
  RandomConfigOptions options;
  options.max_q = 1;
  RandomConfigGenerator gen(7, options);
  std::vector<VerticalConfiguration> configs;
  for (int i = 0; i < 64; ++i) configs.push_back(gen.next());
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(dexterity(configs[i++ % configs.size()]));
}
BENCHMARK(BM_Dexterity);

static void BM_EnumerateIrreducible(benchmark::State& state) {
  const int w = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_irreducible(2, w));
}
BENCHMARK(BM_EnumerateIrreducible)->DenseRange(2, 5);

static void BM_InsertionSweep(benchmark::State& state) {
  LabeledSweepOptions options;
  options.p = 1;
  options.k = 2;
  options.max_points = 2;
  options.max_wk = 6;
  for (auto _ : state)
    labeled_sweep(options, [](const LabeledConfiguration& theta) {
      benchmark::DoNotOptimize(check_insertion_stratum(theta));
    });
}
BENCHMARK(BM_InsertionSweep)->Unit(benchmark::kMillisecond);

static void BM_ConjectureScan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(conjecture_scan(20));
}
BENCHMARK(BM_ConjectureScan)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
