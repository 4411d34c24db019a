#include <benchmark/benchmark.h>

#include "rcflab/cmnumeric.hpp"

using namespace rcf::cm;

// v(w/8) for d = 7 has |q| about 0.35, the slowest point in the suites.
static void BM_VAtW8(benchmark::State& state) {
  const long prec = state.range(0);
  const CMParams p = derive_cm_params(7);
  const Complex tau = p.w(prec + 64) * Complex(Real(rcf::rat(1, 8), prec + 64));
  for (auto _ : state) benchmark::DoNotOptimize(v(tau, prec));
}
BENCHMARK(BM_VAtW8)->Arg(128)->Arg(256)->Arg(512)->Arg(1024)->Unit(benchmark::kMicrosecond);

static void BM_CmSuite(benchmark::State& state) {
  const CMParams p = derive_cm_params(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_cm_suite(p, 256));
}
BENCHMARK(BM_CmSuite)->Arg(7)->Arg(15)->Arg(23)->Unit(benchmark::kMillisecond);

static void BM_RecognizeFd(benchmark::State& state) {
  const CMParams p = derive_cm_params(state.range(0));
  const int deg = static_cast<int>(4 * p.h);
  auto value = [&](long bits) {
    return v(p.w(bits + 64) * Complex(Real(rcf::rat(1, 8), bits + 64)), bits).z;
  };
  const long prec = recognition_precision(deg, rcf::BigInt(1) << (4 * p.h + 8));
  for (auto _ : state)
    benchmark::DoNotOptimize(recognize_min_poly(value, deg, rcf::BigInt(1) << (4 * p.h + 8), prec));
}
BENCHMARK(BM_RecognizeFd)->Arg(7)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_Lll(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  IntMatrix b(n, std::vector<rcf::BigInt>(n + 1));
  rcf::BigInt seed = 1;
  for (std::size_t i = 0; i < n; ++i) {
    b[i][i] = 1;
    seed = (seed * 1103515245 + 12345) % (rcf::BigInt(1) << 200);
    b[i][n] = seed;
  }
  for (auto _ : state) benchmark::DoNotOptimize(lll_reduce(b));
}
BENCHMARK(BM_Lll)->Arg(5)->Arg(9)->Arg(13)->Unit(benchmark::kMillisecond);
