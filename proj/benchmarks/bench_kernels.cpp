#include <benchmark/benchmark.h>

#include "kpos/derivation.hpp"
#include "kpos/eigen.hpp"
#include "kpos/hyperbolic.hpp"
#include "kpos/inequalities.hpp"
#include "kpos/rng.hpp"
#include "kpos/sampling.hpp"
#include "kpos/symfunc.hpp"

using namespace kpos;

namespace {

SymMatrix bench_matrix(std::size_t n) {
  Rng rng(n);
  return random_symmetric(n, rng);
}

void BM_EspTable(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  std::vector<double> x(n);
  for (double& v : x) v = rng.normal();
  for (auto _ : state) benchmark::DoNotOptimize(esp_table(x));
}
BENCHMARK(BM_EspTable)->RangeMultiplier(4)->Range(4, 256);

void BM_EspNewton(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  std::vector<double> x(n);
  for (double& v : x) v = rng.normal();
  for (auto _ : state) benchmark::DoNotOptimize(esp_newton(x, n / 2));
}
BENCHMARK(BM_EspNewton)->RangeMultiplier(4)->Range(4, 256);

void BM_Eigenvalues(benchmark::State& state) {
  const auto a = bench_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(a));
}
BENCHMARK(BM_Eigenvalues)->DenseRange(4, 16, 4)->Arg(32)->Arg(70);

void BM_MinorSum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = bench_matrix(n);
  for (auto _ : state) benchmark::DoNotOptimize(minor_sum(a, n / 2));
}
BENCHMARK(BM_MinorSum)->DenseRange(4, 12, 2);

void BM_Charpoly(benchmark::State& state) {
  const auto a = bench_matrix(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(sk_charpoly(a));
}
BENCHMARK(BM_Charpoly)->DenseRange(4, 16, 4)->Arg(32);

void BM_SkGradient(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = bench_matrix(n);
  for (auto _ : state) benchmark::DoNotOptimize(sk_gradient(a, n / 2));
}
BENCHMARK(BM_SkGradient)->DenseRange(4, 8, 2);

void BM_DerivationSpectrum(benchmark::State& state) {
  const auto a = bench_matrix(8);
  const auto p = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(derivation_matrix(a, p).matrix));
}
BENCHMARK(BM_DerivationSpectrum)->DenseRange(1, 4);

void BM_HadamardCheck(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  const auto a = sample_k_positive_one(n, 3, Profile::generic, rng);
  for (auto _ : state) benchmark::DoNotOptimize(hadamard_check(a, 3));
}
BENCHMARK(BM_HadamardCheck)->DenseRange(4, 8, 2);

void BM_SampleKPositive(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(4);
  for (auto _ : state) benchmark::DoNotOptimize(sample_k_positive_one(n, 3, Profile::generic, rng));
}
BENCHMARK(BM_SampleKPositive)->DenseRange(4, 8, 2);

void BM_AEigenvaluesSk(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto P = make_sk_poly(n, n);
  Rng rng(5);
  std::vector<double> x(n);
  for (double& v : x) v = rng.uniform(-5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(a_eigenvalues(P, P.direction, x));
}
BENCHMARK(BM_AEigenvaluesSk)->DenseRange(4, 8, 2);

}  // namespace

BENCHMARK_MAIN();
