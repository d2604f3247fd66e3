#include <benchmark/benchmark.h>

#include "tia/assembly.hpp"

using namespace tia;

static void BM_CountTilings(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_tilings(n, n));
}
BENCHMARK(BM_CountTilings)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_EnumerateTilings(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(for_each_tiling(n, n, {TileKind::Bi, TileKind::Quad}, nullptr));
}
BENCHMARK(BM_EnumerateTilings)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_LozengeDecorations(benchmark::State& state) {
  auto tilings = enumerate_lozenge_tilings(2, 2, 2);
  for (auto _ : state) {
    std::uint64_t n = 0;
    for (const auto& t : tilings) n += for_each_decoration(t, nullptr);
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_LozengeDecorations)->Unit(benchmark::kMillisecond);

static void BM_BuildBlock(benchmark::State& state) {
  const auto& names = canonical_block_names();
  for (auto _ : state)
    for (const auto& n : names) benchmark::DoNotOptimize(canonical_block(n));
}
BENCHMARK(BM_BuildBlock)->Unit(benchmark::kMillisecond);

static void BM_VerifySpaceFilling(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Assembly a = tiling_to_assembly(random_tiling(n, n, {TileKind::Bi, TileKind::Quad}, 1), 1.0, 1);
  auto z = default_z_samples(1.0);
  a.block("versatile");
  a.block("bisquare_unit");
  for (auto _ : state) benchmark::DoNotOptimize(verify_space_filling(a, z).pass);
  state.counters["placements"] = static_cast<double>(a.placements.size());
}
BENCHMARK(BM_VerifySpaceFilling)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
