#include "qinv3/sl2z.hpp"

#include <benchmark/benchmark.h>

using namespace qinv3;

namespace {

void BM_ModularData(benchmark::State& state) {
  GroupTable g = make_group("Z" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dg_modular_data(g));
}
BENCHMARK(BM_ModularData)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_Trace(benchmark::State& state) {
  ModularData md = dg_modular_data(make_group("Z4"));
  for (auto _ : state) benchmark::DoNotOptimize(tv_trace({5, 2, 2, 1}, md));
}
BENCHMARK(BM_Trace)->Unit(benchmark::kMillisecond);

void BM_PairSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_congruence_pairs(static_cast<int>(state.range(0)), 30, 50, 1));
}
BENCHMARK(BM_PairSearch)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
