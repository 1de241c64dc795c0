#include <benchmark/benchmark.h>

#include "harmonica/census.hpp"
#include "harmonica/covers.hpp"
#include "harmonica/families.hpp"

using namespace harmonica;

static void BM_AutomorphismGroupOrder(benchmark::State& state) {
  auto g = lower_bound_family(static_cast<int>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group_order(g));
}
BENCHMARK(BM_AutomorphismGroupOrder)->Arg(4)->Arg(8)->Arg(12);

static void BM_CanonicalKey(benchmark::State& state) {
  auto g = macbeath(static_cast<int>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(g));
}
BENCHMARK(BM_CanonicalKey)->Arg(2)->Arg(3)->Arg(4);

static void BM_MaxHarmonicOrder(benchmark::State& state) {
  auto g = lower_bound_family(static_cast<int>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(max_harmonic_order(g).order);
}
BENCHMARK(BM_MaxHarmonicOrder)->Arg(3)->Arg(5)->Arg(7);

static void BM_Macbeath(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(macbeath(static_cast<int>(state.range(0))).group.order());
}
BENCHMARK(BM_Macbeath)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_HarmonicCriterion(benchmark::State& state) {
  auto mb = macbeath(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_harmonic_action(mb.group).harmonic);
}
BENCHMARK(BM_HarmonicCriterion)->Arg(2)->Arg(3);

static void BM_Census(benchmark::State& state) {
  CensusOptions opt;
  opt.genus = static_cast<int>(state.range(0));
  opt.max_vertices = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(run_census(opt).max_order);
}
BENCHMARK(BM_Census)->Args({2, 5})->Args({2, 6})->Args({3, 6})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
