#include <benchmark/benchmark.h>

#include "hetero/oracle/oracle.hpp"
#include "hetero/ratpoly/resultant.hpp"
#include "hetero/separatrix/separatrix.hpp"

using namespace hetero;

static void BM_TaylorSymbolic(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(taylor_coeffs(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TaylorSymbolic)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_TaylorFixedR(benchmark::State& state) {
  const Rat r = make_rat(Int(1), Int(10));
  for (auto _ : state) benchmark::DoNotOptimize(taylor_coeffs(r, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TaylorFixedR)->Arg(20)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_PadeBound(benchmark::State& state) {
  const Rat r = make_rat(Int(1), Int(10));
  for (auto _ : state) benchmark::DoNotOptimize(pade_bound(r, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PadeBound)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_UpperCertificate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(upper_certificate(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_UpperCertificate)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_OraclePhase(benchmark::State& state) {
  const ReactionTerm f = preset("fisher");
  const Rat r = make_rat(Int(1), Int(10));
  std::vector<Rat> xs;
  for (int j = 1; j <= state.range(0); ++j) xs.push_back(make_rat(Int(j), Int(state.range(0) + 1)));
  for (auto _ : state) benchmark::DoNotOptimize(integrate_phase(f, r, xs));
}
BENCHMARK(BM_OraclePhase)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
