#include <benchmark/benchmark.h>

#include "rcflab/padic2.hpp"

using namespace rcf::padic;

static void BM_EvalT(benchmark::State& state) {
  const auto ctx = Context::make(3, static_cast<int>(state.range(0)));
  const Elem x = Elem::from_coeffs(ctx, {rcf::BigInt(12345), rcf::BigInt(678), rcf::BigInt(91)});
  for (auto _ : state) benchmark::DoNotOptimize(eval_T(x));
}
BENCHMARK(BM_EvalT)->Arg(32)->Arg(64)->Arg(128);

static void BM_Inverse(benchmark::State& state) {
  const auto ctx = Context::make(4, 128);
  const Elem x = Elem::from_coeffs(ctx, {rcf::BigInt(3), rcf::BigInt(5), rcf::BigInt(7), rcf::BigInt(2)});
  for (auto _ : state) benchmark::DoNotOptimize(x.inverse());
}
BENCHMARK(BM_Inverse);

static void BM_FindPeriodicPoints(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto ctx = Context::make(n, 64);
  for (auto _ : state) benchmark::DoNotOptimize(find_periodic_points(n, ctx));
}
BENCHMARK(BM_FindPeriodicPoints)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);
