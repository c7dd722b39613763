// Microbenchmarks for the three cost regimes: O(log n) closed forms,
// O(n) literal summation, O(U(n)) simulation.

#include <benchmark/benchmark.h>

#include <random>

#include "uwca/automaton.hpp"
#include "uwca/enumeration.hpp"
#include "uwca/weight_sums.hpp"

namespace {

using namespace uwca;

Index random_digits(std::size_t digits) {
  std::mt19937_64 rng(digits);
  std::string text = "1";
  while (text.size() < digits) {
    text.push_back(static_cast<char>('0' + rng() % 10));
  }
  return Index(text);
}

void BM_WeightSumFast(benchmark::State& state) {
  const Index n = random_digits(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(weight_sum_fast(n));
  }
}
BENCHMARK(BM_WeightSumFast)->Arg(20)->Arg(100)->Arg(1000)->Arg(10000);

void BM_WeightSumNaive(benchmark::State& state) {
  const Index n(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(weight_sum_naive(n));
  }
}
BENCHMARK(BM_WeightSumNaive)->Arg(1 << 10)->Arg(1 << 14)->Arg(1 << 18);

void BM_TotalCells100Digits(benchmark::State& state) {
  const Index n = random_digits(100);
  for (auto _ : state) {
    benchmark::DoNotOptimize(total_cells(n));
  }
}
BENCHMARK(BM_TotalCells100Digits);

void BM_SimulateFrontier(benchmark::State& state) {
  const Index n(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_to(n).on_set.size());
  }
}
BENCHMARK(BM_SimulateFrontier)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_SimulateNaive(benchmark::State& state) {
  const Index n(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_to(n, kDefaultSimulationBudget, StepMode::naive).on_set.size());
  }
}
BENCHMARK(BM_SimulateNaive)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_RatioScanBlock(benchmark::State& state) {
  const auto k = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ratio_scan(k).blocks.back().min);
  }
}
BENCHMARK(BM_RatioScanBlock)->Arg(10)->Arg(14)->Arg(16)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
