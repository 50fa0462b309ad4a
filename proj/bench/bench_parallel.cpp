// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "latbounce/bounce_gf.hpp"
#include "latbounce/oracle.hpp"

using namespace latbounce;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_EnumerateProfiles(benchmark::State& state) {
  const Slope slope(static_cast<unsigned>(state.range(1)), static_cast<unsigned>(state.range(2)));
  const std::size_t k = 22 / slope.steps_per_unit();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_profiles(slope, k, mode(state)));
  state.SetLabel(mode(state) == Execution::serial ? "serial" : "parallel");
}

void BM_ClosedFormTable(benchmark::State& state) {
  const Slope slope(static_cast<unsigned>(state.range(1)), static_cast<unsigned>(state.range(2)));
  for (auto _ : state) benchmark::DoNotOptimize(bounce_table_closed_form(slope, 6, 6, 24, mode(state)));
  state.SetLabel(mode(state) == Execution::serial ? "serial" : "parallel");
}

}  // namespace

BENCHMARK(BM_EnumerateProfiles)->ArgsProduct({{0, 1}, {1}, {1}})->Args({0, 3, 4})->Args({1, 3, 4})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosedFormTable)->ArgsProduct({{0, 1}, {1, 2}, {1, 3}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
