#include <benchmark/benchmark.h>

#include "rcflab/exactalg/identities.hpp"
#include "rcflab/exactalg/periodic.hpp"
#include "rcflab/exactalg/resultant.hpp"

static void BM_PeriodicPoly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rcf::periodic_poly(n));
}
BENCHMARK(BM_PeriodicPoly)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

static void BM_Mod2Congruence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const rcf::ZPoly rn = rcf::periodic_poly(n);
  for (auto _ : state) benchmark::DoNotOptimize(rcf::check_mod2_congruence(rn, n));
}
BENCHMARK(BM_Mod2Congruence)->DenseRange(2, 6);

static void BM_BivariateIdentities(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rcf::check_bivariate_identities());
}
BENCHMARK(BM_BivariateIdentities)->Unit(benchmark::kMillisecond);

static void BM_ResultantOfPeriodicPolys(benchmark::State& state) {
  const rcf::ZPoly a = rcf::periodic_poly(3), b = rcf::periodic_poly(4);
  for (auto _ : state) benchmark::DoNotOptimize(rcf::resultant(a, b));
}
BENCHMARK(BM_ResultantOfPeriodicPolys)->Unit(benchmark::kMillisecond);
