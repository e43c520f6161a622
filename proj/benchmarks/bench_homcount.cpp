#include "qinv3/homcount.hpp"
#include "qinv3/triangulation.hpp"

#include <benchmark/benchmark.h>

using namespace qinv3;

namespace {

const char* kGroups[] = {"S3", "Q8", "A4", "S4", "SL2_3", "A5"};

void BM_TorusBundleHoms(benchmark::State& state) {
  Presentation p = torus_bundle_presentation({3, 2, 1, 1});
  GroupTable g = make_group(kGroups[state.range(0)]);
  HomCountOptions opt;
  opt.symmetry_reduction = state.range(1) != 0;
  opt.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(count_homs(p, g, opt));
  state.SetLabel(g.name() + (opt.symmetry_reduction ? " reduced" : " plain"));
}
BENCHMARK(BM_TorusBundleHoms)->ArgsProduct({{0, 1, 2, 3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_T3Homs(benchmark::State& state) {
  Presentation p = manifold_presentation("t3");
  GroupTable g = make_group(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(count_homs(p, g));
  state.SetLabel(g.name());
}
BENCHMARK(BM_T3Homs)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_Fingerprint(benchmark::State& state) {
  Presentation p = torus_bundle_presentation({1, 1, 18, 19});
  auto catalog = full_catalog();
  for (auto _ : state) benchmark::DoNotOptimize(fingerprint(p, catalog));
}
BENCHMARK(BM_Fingerprint)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
