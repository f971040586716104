#include <benchmark/benchmark.h>

#include "skewbrace/classify.hpp"
#include "skewbrace/enumerate.hpp"
#include "skewbrace/fixtures.hpp"
#include "skewbrace/series.hpp"
#include "skewbrace/ybe.hpp"

using namespace skewbrace;

static void BM_Census(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census(n).entries.size());
}
BENCHMARK(BM_Census)->DenseRange(4, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_FixtureBuild(benchmark::State& state) {
  const auto name = fixture_names()[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(name);
  for (auto _ : state) benchmark::DoNotOptimize(build_fixture(name).brace().order());
}
BENCHMARK(BM_FixtureBuild)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_Supersoluble(benchmark::State& state) {
  const auto name = fixture_names()[static_cast<std::size_t>(state.range(0))];
  const auto ex = build_fixture(name);
  state.SetLabel(name);
  for (auto _ : state) benchmark::DoNotOptimize(is_supersoluble(ex.brace()));
}
BENCHMARK(BM_Supersoluble)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_SocleSeries(benchmark::State& state) {
  const auto ex = build_fixture("ex32");
  for (auto _ : state) benchmark::DoNotOptimize(socle_series(ex.brace()).length());
}
BENCHMARK(BM_SocleSeries)->Unit(benchmark::kMillisecond);

static void BM_BraidCheck(benchmark::State& state) {
  const auto s = solution_from_brace(build_fixture("ex32").brace());
  for (auto _ : state) benchmark::DoNotOptimize(verify_solution(s).braid);
}
BENCHMARK(BM_BraidCheck)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
