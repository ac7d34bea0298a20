#include <benchmark/benchmark.h>

#include <random>

#include "gralg/algebra.hpp"
#include "gralg/hochschild.hpp"
#include "gralg/linalg.hpp"
#include "gralg/stability.hpp"

using namespace gralg;

namespace {

Matrix random_matrix(const Field& f, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> v(-5, 5);
  std::bernoulli_distribution keep(0.3);
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (keep(rng)) m.set(i, j, Scalar(f, v(rng)));
  return m;
}

void BM_RankRational(benchmark::State& state) {
  const auto m = random_matrix(Field::rational(), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankRational)->Arg(16)->Arg(32)->Arg(64);

void BM_RankGF(benchmark::State& state) {
  const auto m = random_matrix(Field::prime(101), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_RankGF)->Arg(16)->Arg(32)->Arg(64);

void BM_CohomologyPolynomial(benchmark::State& state) {
  const auto a = polynomial_algebra(2, static_cast<std::size_t>(state.range(0)), Field::rational());
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(a, 2));
}
BENCHMARK(BM_CohomologyPolynomial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_CohomologyFreeGF(benchmark::State& state) {
  const auto a = free_algebra(2, 3, Field::prime(3));
  for (auto _ : state) benchmark::DoNotOptimize(cohomology(a, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_CohomologyFreeGF)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_BracketSelf(benchmark::State& state) {
  const auto a = free_algebra(2, 4, Field::rational());
  for (auto _ : state) benchmark::DoNotOptimize(circle(a.mu(), a.mu()));
}
BENCHMARK(BM_BracketSelf)->Unit(benchmark::kMillisecond);

void BM_StabilityExhaustive(benchmark::State& state) {
  const auto a = polynomial_algebra(static_cast<std::size_t>(state.range(0)), 2, Field::prime(2));
  const auto theta = standard_parameter(a.space().dims());
  SearchOptions o;
  o.r_max = 2;
  for (auto _ : state) benchmark::DoNotOptimize(check_q_stability(a, theta, o));
}
BENCHMARK(BM_StabilityExhaustive)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
