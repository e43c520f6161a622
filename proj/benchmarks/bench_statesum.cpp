#include "qinv3/statesum.hpp"

#include <benchmark/benchmark.h>

using namespace qinv3;

namespace {

void BM_StateSum(benchmark::State& state, const char* manifold, const char* category) {
  Triangulation t = make_manifold(manifold);
  FusionData c = make_category(category);
  StateSumOptions opt;
  opt.threads = static_cast<int>(state.range(0));
  std::uint64_t labellings = 0;
  for (auto _ : state) labellings = tv_state_sum(t, c, opt).labellings;
  state.counters["labellings"] = static_cast<double>(labellings);
}
BENCHMARK_CAPTURE(BM_StateSum, lens72_sl2_5, "lens:7,2", "sl2:5")->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_StateSum, lens72_sl2_7, "lens:7,2", "sl2:7")->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_StateSum, t3_fib, "t3", "fib")->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_StateSum, t3_q8, "t3", "vecg:Q8")->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_StateSum, rrll_s3, "bundle:RRLL", "vecg:S3")->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Skeleton(benchmark::State& state) {
  Triangulation t = make_manifold("bundle:RLRLRLRL");
  for (auto _ : state) benchmark::DoNotOptimize(compute_skeleton(t));
}
BENCHMARK(BM_Skeleton);

}  // namespace

BENCHMARK_MAIN();
