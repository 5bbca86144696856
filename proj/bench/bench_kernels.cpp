// Serial against OpenMP F_q kernels: dense multiply and row reduction.
#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ppcan/kernels.hpp"

using namespace ppcan;

namespace {

std::vector<Fe> random_matrix(const Field& f, int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(0, f.order() - 1);
  std::vector<Fe> a(static_cast<std::size_t>(n) * n);
  for (auto& x : a) x = static_cast<Fe>(dist(rng));
  return a;
}

template <bool Parallel>
void bm_multiply(benchmark::State& state) {
  const auto f = Field::build(3, 8);
  const int n = static_cast<int>(state.range(0));
  const auto a = random_matrix(*f, n, 1), b = random_matrix(*f, n, 2);
  std::vector<Fe> c(a.size());
  for (auto _ : state) {
    if constexpr (Parallel)
      kernels::omp::multiply(*f, {a.data(), n, n}, {b.data(), n, n}, c.data());
    else
      kernels::serial::multiply(*f, {a.data(), n, n}, {b.data(), n, n}, c.data());
    benchmark::DoNotOptimize(c.data());
  }
  state.SetComplexityN(n);
}

template <bool Parallel>
void bm_rref(benchmark::State& state) {
  const auto f = Field::build(3, 8);
  const int n = static_cast<int>(state.range(0));
  const auto a = random_matrix(*f, n, 3);
  for (auto _ : state) {
    state.PauseTiming();
    std::vector<Fe> w = a;
    state.ResumeTiming();
    auto piv = Parallel ? kernels::omp::rref(*f, w.data(), n, n) : kernels::serial::rref(*f, w.data(), n, n);
    benchmark::DoNotOptimize(piv.data());
  }
  state.SetComplexityN(n);
}

}  // namespace

BENCHMARK(bm_multiply<false>)->RangeMultiplier(2)->Range(64, 512)->Complexity();
BENCHMARK(bm_multiply<true>)->RangeMultiplier(2)->Range(64, 512)->Complexity();
BENCHMARK(bm_rref<false>)->RangeMultiplier(2)->Range(64, 512)->Complexity();
BENCHMARK(bm_rref<true>)->RangeMultiplier(2)->Range(64, 512)->Complexity();

BENCHMARK_MAIN();
