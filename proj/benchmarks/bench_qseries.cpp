#include <benchmark/benchmark.h>

#include "rcflab/qseries/builders.hpp"
#include "rcflab/qseries/catalog.hpp"

static void BM_BuildV(benchmark::State& state) {
  const rcf::BigRational order(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rcf::qs::v(order));
}
BENCHMARK(BM_BuildV)->RangeMultiplier(2)->Range(25, 200);

static void BM_BuildJ(benchmark::State& state) {
  const rcf::BigRational order(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rcf::qs::j(order));
}
BENCHMARK(BM_BuildJ)->RangeMultiplier(2)->Range(25, 100)->Unit(benchmark::kMillisecond);

static void BM_FullCatalog(benchmark::State& state) {
  const rcf::BigRational order(state.range(0));
  for (auto _ : state)
    for (const auto& rec : rcf::qs::catalog())
      benchmark::DoNotOptimize(rcf::qs::verify_identity(rec, order));
}
BENCHMARK(BM_FullCatalog)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);
