// Microbenchmarks for the hot paths: the dividend (Möbius) transform, the
// Shapley vector, whole group-value tables and the sampling estimators.
// Sizes are chosen so a full run stays in the seconds range; pass
// --benchmark_filter to narrow.

#include <benchmark/benchmark.h>

#include "coalgame/approx.hpp"
#include "coalgame/generate.hpp"
#include "coalgame/group_values.hpp"
#include "coalgame/player_values.hpp"
#include "coalgame/transforms.hpp"

namespace {

using coalgame::Coalition;
using coalgame::Game;

Game bench_game(int n) {
  return coalgame::generate_game(n, coalgame::GameFamily::Positive, 2024);
}

void BM_DividendTransform(benchmark::State& state) {
  const Game g = bench_game(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(coalgame::dividends(g));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DividendTransform)->Arg(12)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_Shapley(benchmark::State& state) {
  const Game g = bench_game(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(coalgame::shapley(g));
  }
}
BENCHMARK(BM_Shapley)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_UnionShapleyTable(benchmark::State& state) {
  const Game g = bench_game(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        coalgame::full_table(g, coalgame::GroupValueKind::UnionShapley));
  }
}
BENCHMARK(BM_UnionShapleyTable)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_MergeShapleyTable(benchmark::State& state) {
  const Game g = bench_game(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        coalgame::full_table(g, coalgame::GroupValueKind::MergeShapley));
  }
}
BENCHMARK(BM_MergeShapleyTable)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_ApproxShapley(benchmark::State& state) {
  const Game g = bench_game(14);
  const coalgame::GameOracle oracle = coalgame::oracle_from_game(g);
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(coalgame::approx_shapley(oracle, 3, samples, 7));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(samples));
}
BENCHMARK(BM_ApproxShapley)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_ApproxUnionShapley(benchmark::State& state) {
  const Game g = bench_game(14);
  const coalgame::GameOracle oracle = coalgame::oracle_from_game(g);
  const Coalition s = Coalition::singleton(0).with(5).with(9);
  const auto samples = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(coalgame::approx_union_shapley(oracle, s, samples, 7));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(samples));
}
BENCHMARK(BM_ApproxUnionShapley)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
