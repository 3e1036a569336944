#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hardy/blaschke.hpp"
#include "hardy/signal.hpp"
#include "hardy/unwind.hpp"
#include "hardy/verify.hpp"

using namespace hardy;

namespace {

Series instance(std::size_t degree, std::size_t roots) {
  InstanceSpec spec;
  spec.degree_cap = degree;
  spec.root_count = roots;
  spec.seed = degree * 31 + roots;
  return generate_instance(spec);
}

void BM_FindRoots(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Series f = instance(n, n / 2);
  for (auto _ : state) benchmark::DoNotOptimize(find_roots_in_disk(f));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FindRoots)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_Decompose(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Series f = instance(n, std::min<std::size_t>(n, 8));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(f));
}
BENCHMARK(BM_Decompose)->RangeMultiplier(2)->Range(8, 64);

void BM_Unwind(benchmark::State& state) {
  const Series f = instance(16, 6);
  const std::size_t depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(unwind(f, depth));
}
BENCHMARK(BM_Unwind)->Arg(2)->Arg(4)->Arg(8);

void BM_Fft(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<Complex> data(n);
  for (std::size_t k = 0; k < n; ++k) data[k] = std::polar(1.0, 0.37 * static_cast<double>(k * k));
  for (auto _ : state) {
    std::vector<Complex> copy = data;
    fft_in_place(copy, -1);
    benchmark::DoNotOptimize(copy.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Fft)->RangeMultiplier(4)->Range(1 << 8, 1 << 18)->Complexity(benchmark::oNLogN);

void BM_AnalyticSignal(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<double> s(n);
  for (std::size_t k = 0; k < n; ++k) s[k] = std::cos(2.0 * std::numbers::pi * 3.0 * static_cast<double>(k) / static_cast<double>(n));
  const BoundarySignal signal(s);
  for (auto _ : state) benchmark::DoNotOptimize(analytic_signal(signal, n / 2 - 1));
}
BENCHMARK(BM_AnalyticSignal)->Arg(1 << 10)->Arg(1 << 14);

void BM_TruncatedProduct(benchmark::State& state) {
  const std::size_t cap = static_cast<std::size_t>(state.range(0));
  std::vector<Complex> alphas;
  for (int j = 1; j <= 30; ++j) alphas.push_back(std::polar(1.0 - 1.0 / ((j + 1.0) * (j + 1.0)), double(j)));
  const RootSet roots(alphas);
  const std::vector<std::size_t> caps{cap};
  const WeightSequence w = WeightSequence::concave_power_sum(3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem3_truncated(roots, Series{1.0}, w, caps));
}
BENCHMARK(BM_TruncatedProduct)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
