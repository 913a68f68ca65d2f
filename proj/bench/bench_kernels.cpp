#include <benchmark/benchmark.h>

#include "dpow/braid.hpp"
#include "dpow/density.hpp"
#include "dpow/hamsearch.hpp"
#include "dpow/kernels.hpp"
#include "dpow/montecarlo.hpp"

namespace {

using namespace dpow;

void BM_SubsetProfileSerial(benchmark::State& state) {
  const Graph g = braid({5, 3, static_cast<int>(state.range(0)), 1});
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::subset_profile(g));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << g.n()));
}
BENCHMARK(BM_SubsetProfileSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_SubsetProfileOmp(benchmark::State& state) {
  const Graph g = braid({5, 3, static_cast<int>(state.range(0)), 1});
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::subset_profile(g));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << g.n()));
}
BENCHMARK(BM_SubsetProfileOmp)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_MinSameSideSerial(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::serial::min_same_side_edges(3, L));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << L));
}
BENCHMARK(BM_MinSameSideSerial)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_MinSameSideOmp(benchmark::State& state) {
  const int L = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::omp::min_same_side_edges(3, L));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << L));
}
BENCHMARK(BM_MinSameSideOmp)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_MaxDensityOpt(benchmark::State& state) {
  const Graph g = braid({5, 3, static_cast<int>(state.range(0)), 1});
  for (auto _ : state) benchmark::DoNotOptimize(max_density_opt(g));
}
BENCHMARK(BM_MaxDensityOpt)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_HamSearchCyclePower(benchmark::State& state) {
  const Graph g = cycle_power(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(contains_ham_power(g, 2));
}
BENCHMARK(BM_HamSearchCyclePower)->Arg(30)->Arg(60);

void BM_Sweep(benchmark::State& state) {
  ExperimentConfig cfg;
  cfg.n = 16;
  cfg.m = 2;
  cfg.base.kind = BaseGraph::Kind::geps;
  cfg.base.eps = Rational(1, 12);
  for (int i = 0; i <= 10; ++i) cfg.p_list.push_back(i / 10.0);
  cfg.trials = 20;
  cfg.seed = 7;
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(cfg, workers));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
