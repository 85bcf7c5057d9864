// Serial reference kernels against their OpenMP counterparts, plus whole
// reductions. Sizes are the half-dimension h; matrices are 2h x 2h.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "jhess/experiments.hpp"
#include "jhess/kernels.hpp"
#include "jhess/reduction.hpp"

namespace {

using jhess::DenseMatrix;
using jhess::Index;

DenseMatrix random_matrix(Index rows, Index cols, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  DenseMatrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = dist(rng);
  return m;
}

std::vector<double> random_vector(Index len, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(len));
  for (double& x : v) x = dist(rng);
  return v;
}

template <bool Parallel>
void BM_ShLeft(benchmark::State& state) {
  const Index h = state.range(0);
  DenseMatrix m = random_matrix(2 * h, 2 * h, 1);
  const std::vector<double> v = random_vector(2 * h, 2);
  for (auto _ : state) {
    if constexpr (Parallel)
      jhess::kernels::parallel::sh_left(1e-9, v, 0, m);
    else
      jhess::kernels::serial::sh_left(1e-9, v, 0, m);
    benchmark::DoNotOptimize(m.data());
  }
}

template <bool Parallel>
void BM_ShRightAdjoint(benchmark::State& state) {
  const Index h = state.range(0);
  DenseMatrix m = random_matrix(2 * h, 2 * h, 3);
  const std::vector<double> v = random_vector(2 * h, 4);
  for (auto _ : state) {
    if constexpr (Parallel)
      jhess::kernels::parallel::sh_right_adjoint(1e-9, v, 0, m);
    else
      jhess::kernels::serial::sh_right_adjoint(1e-9, v, 0, m);
    benchmark::DoNotOptimize(m.data());
  }
}

template <bool Parallel>
void BM_ReflectorLeft(benchmark::State& state) {
  const Index h = state.range(0);
  DenseMatrix m = random_matrix(2 * h, 2 * h, 5);
  const std::vector<double> w = random_vector(h, 6);
  double ww = 0.0;
  for (double x : w) ww += x * x;
  const double beta = 2.0 / ww;
  for (auto _ : state) {
    if constexpr (Parallel)
      jhess::kernels::parallel::reflector_left(0, beta, w, m);
    else
      jhess::kernels::serial::reflector_left(0, beta, w, m);
    benchmark::DoNotOptimize(m.data());
  }
}

template <bool Parallel>
void BM_Gemm(benchmark::State& state) {
  const Index h = state.range(0);
  const DenseMatrix a = random_matrix(2 * h, 2 * h, 7);
  const DenseMatrix b = random_matrix(2 * h, 2 * h, 8);
  for (auto _ : state) {
    DenseMatrix c = Parallel ? jhess::kernels::parallel::gemm(a, b) : jhess::kernels::serial::gemm(a, b);
    benchmark::DoNotOptimize(c.data());
  }
}

void BM_Reduce(benchmark::State& state) {
  const auto variant = static_cast<jhess::Variant>(state.range(1));
  const DenseMatrix a = jhess::gen_family1(state.range(0));
  for (auto _ : state) {
    try {
      auto r = jhess::reduce(a, variant);
      benchmark::DoNotOptimize(r.h.data());
    } catch (const jhess::BreakdownError& e) {
      state.SkipWithError(e.what());
      break;
    }
  }
  state.SetLabel(jhess::to_string(variant));
}

}  // namespace

BENCHMARK(BM_ShLeft<false>)->RangeMultiplier(2)->Range(32, 512);
BENCHMARK(BM_ShLeft<true>)->RangeMultiplier(2)->Range(32, 512);
BENCHMARK(BM_ShRightAdjoint<false>)->RangeMultiplier(2)->Range(32, 512);
BENCHMARK(BM_ShRightAdjoint<true>)->RangeMultiplier(2)->Range(32, 512);
BENCHMARK(BM_ReflectorLeft<false>)->RangeMultiplier(2)->Range(32, 512);
BENCHMARK(BM_ReflectorLeft<true>)->RangeMultiplier(2)->Range(32, 512);
BENCHMARK(BM_Gemm<false>)->RangeMultiplier(2)->Range(16, 128);
BENCHMARK(BM_Gemm<true>)->RangeMultiplier(2)->Range(16, 128);
BENCHMARK(BM_Reduce)
    ->ArgsProduct({{10, 20, 30},
                   {static_cast<long>(jhess::Variant::JHOSH), static_cast<long>(jhess::Variant::JHMSH),
                    static_cast<long>(jhess::Variant::JHMSH2)}})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
