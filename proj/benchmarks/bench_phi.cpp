#include <benchmark/benchmark.h>

#include "plethy/plethy.hpp"

using namespace plethy;

static void BM_PhiContext(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0)), d = static_cast<int>(state.range(1));
  for (auto _ : state) {
    PhiContext<RationalField> ctx(RationalField{}, N, d);
    benchmark::DoNotOptimize(ctx.dim());
  }
}
BENCHMARK(BM_PhiContext)->Args({2, 4})->Args({3, 5})->Args({3, 8})->Args({4, 8})->Unit(benchmark::kMillisecond);

static void BM_MuKernelRank(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0)), d = static_cast<int>(state.range(1));
  RationalField qq;
  auto mu = mu_matrix(qq, N, d);
  for (auto _ : state) benchmark::DoNotOptimize(rank(qq, mu));
}
BENCHMARK(BM_MuKernelRank)->Args({2, 6})->Args({3, 6})->Args({3, 8})->Unit(benchmark::kMillisecond);

static void BM_MuKernelRankFp(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0)), d = static_cast<int>(state.range(1));
  PrimeField f(7);
  auto mu = mu_matrix(f, N, d);
  for (auto _ : state) benchmark::DoNotOptimize(rank(f, mu));
}
BENCHMARK(BM_MuKernelRankFp)->Args({3, 6})->Args({3, 8})->Unit(benchmark::kMillisecond);

static void BM_PolyGammaEquivariance(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0)), d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(verify_group_equivariance_poly(N, d));
}
BENCHMARK(BM_PolyGammaEquivariance)->Args({2, 4})->Args({3, 6})->Unit(benchmark::kMillisecond);

static void BM_JordanType(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  PrimeField f2(2);
  auto u = group_action_matrix(f2, phi_domain_space(3, d), unipotent_upper(f2, f2.one()));
  for (auto _ : state) benchmark::DoNotOptimize(jordan_type(f2, u));
}
BENCHMARK(BM_JordanType)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
