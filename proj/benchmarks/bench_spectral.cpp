#include <random>

#include <benchmark/benchmark.h>

#include "spectral/spectral.hpp"

namespace {

using namespace spectral;

ComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ComplexMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = {u(rng), u(rng)};
  return out;
}

MatrixFamily random_affine(std::size_t rows, std::size_t cols, std::size_t p, bool hermitian) {
  std::mt19937_64 rng(11);
  auto draw = [&] {
    const ComplexMatrix m = random_matrix(rng, rows, cols);
    return hermitian ? hermitian_part(m) : m;
  };
  const ComplexMatrix base = draw();
  std::vector<ComplexMatrix> coefficients;
  for (std::size_t j = 0; j < p; ++j) coefficients.push_back(draw());
  return make_affine(base, std::move(coefficients));
}

void BM_HermitianEig(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  const ComplexMatrix a = hermitian_part(random_matrix(rng, n, n));
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(a));
}
BENCHMARK(BM_HermitianEig)->RangeMultiplier(2)->Range(4, 64)->Unit(benchmark::kMicrosecond);

void BM_EigDirectionalDerivative(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MatrixFamily family = random_affine(n, n, 3, true);
  const std::vector<double> x0 = {0.1, -0.2, 0.3};
  const std::vector<double> d = normalized(std::vector<double>{1.0, 2.0, 2.0});
  for (auto _ : state) benchmark::DoNotOptimize(eig_directional_derivative(family, x0, 1, d));
}
BENCHMARK(BM_EigDirectionalDerivative)->Arg(4)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_ClusterSumGradient(benchmark::State& state) {
  const MatrixFamily family = random_affine(16, 16, 4, true);
  const std::vector<double> x0 = {0.1, -0.2, 0.3, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(cluster_sum_gradient(family, x0, 1));
}
BENCHMARK(BM_ClusterSumGradient)->Unit(benchmark::kMicrosecond);

void BM_SvEmbedding(benchmark::State& state) {
  const MatrixFamily family = random_affine(6, 4, 2, false);
  const std::vector<double> x0 = {0.2, 0.4};
  const std::vector<double> d = {0.6, 0.8};
  for (auto _ : state) benchmark::DoNotOptimize(sv_directional_derivative(family, x0, 2, d));
}
BENCHMARK(BM_SvEmbedding)->Unit(benchmark::kMicrosecond);

void BM_SvReduced(benchmark::State& state) {
  const MatrixFamily family = random_affine(6, 4, 2, false);
  const std::vector<double> x0 = {0.2, 0.4};
  const std::vector<double> d = {0.6, 0.8};
  for (auto _ : state) benchmark::DoNotOptimize(sv_derivative_reduced(family, x0, 2, d));
}
BENCHMARK(BM_SvReduced)->Unit(benchmark::kMicrosecond);

void BM_FdDirectional(benchmark::State& state) {
  const MatrixFamily family = random_affine(8, 8, 2, true);
  const std::vector<double> x0 = {0.2, 0.4};
  const std::vector<double> d = {0.6, 0.8};
  const ScalarFunction phi = [&](std::span<const double> x) {
    return hermitian_eig(family.evaluate(x)).eigenvalues[0];
  };
  for (auto _ : state) benchmark::DoNotOptimize(fd_directional(phi, x0, d, default_fd_step(x0)));
}
BENCHMARK(BM_FdDirectional)->Unit(benchmark::kMicrosecond);

void BM_IkramovClassify(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const ComplexMatrix a = random_matrix(rng, 3, 3);
  const std::vector<double> xi0(4, 0.0);
  const auto directions = sphere_directions(4, 16);
  for (auto _ : state) benchmark::DoNotOptimize(classify_critical_point(a, xi0, directions));
}
BENCHMARK(BM_IkramovClassify)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
