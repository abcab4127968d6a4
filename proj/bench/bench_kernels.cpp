// Serial reference vs OpenMP kernels: the Cauchy product behind qs_mul and
// batch evaluation of independent index problems.

#include "equindex/index.hpp"
#include "equindex/kernels.hpp"
#include "equindex/numbers.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace equindex;

namespace {

std::vector<Integer> random_coeffs(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-1'000'000'000L, 1'000'000'000L);
  std::vector<Integer> v;
  v.reserve(n);
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(dist(rng));
  return v;
}

void BM_ConvolveSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_coeffs(n, 1), b = random_coeffs(n, 2);
  const Integer zero = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::convolve_serial<Integer>(a, b, 2 * n - 1, zero));
  state.SetComplexityN(state.range(0));
}

void BM_ConvolveParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_coeffs(n, 1), b = random_coeffs(n, 2);
  const Integer zero = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::convolve_parallel<Integer>(a, b, 2 * n - 1, zero));
  state.SetComplexityN(state.range(0));
}

std::vector<ProblemSpec> loop_problems(int order) {
  std::vector<ProblemSpec> specs;
  for (int g = 0; g < 8; ++g) specs.push_back(preset_problem("lsigma:" + std::to_string(g), order));
  for (int k = 1; k <= 8; ++k) specs.push_back(preset_problem("cplane:" + std::to_string(k), order));
  return specs;
}

void BM_BatchSerial(benchmark::State& state) {
  const auto specs = loop_problems(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(localized_index_batch_serial(specs));
}

void BM_BatchParallel(benchmark::State& state) {
  const auto specs = loop_problems(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(localized_index_batch(specs));
}

}  // namespace

BENCHMARK(BM_ConvolveSerial)->RangeMultiplier(4)->Range(64, 4096)->Complexity();
BENCHMARK(BM_ConvolveParallel)->RangeMultiplier(4)->Range(64, 4096)->Complexity()->UseRealTime();
BENCHMARK(BM_BatchSerial)->Arg(20)->Arg(40);
BENCHMARK(BM_BatchParallel)->Arg(20)->Arg(40)->UseRealTime();

BENCHMARK_MAIN();
