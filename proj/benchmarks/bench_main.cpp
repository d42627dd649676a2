#include "basicforms/basic.hpp"
#include "basicforms/linalg.hpp"
#include "basicforms/plots.hpp"
#include "basicforms/verify.hpp"
#include "models.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace basicforms;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, bool with_parameter, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-9, 9);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      m(i, j) = Scalar(static_cast<long>(entry(rng)));
      if (with_parameter && entry(rng) > 5) m(i, j) += Scalar(static_cast<long>(entry(rng))) * Scalar::parameter();
    }
  return m;
}

void BM_KernelRational(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix m = random_matrix(n / 2, n, false, 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_KernelRational)->Arg(8)->Arg(16)->Arg(32);

void BM_KernelParametric(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix m = random_matrix(n / 2, n, true, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_basis(m));
}
BENCHMARK(BM_KernelParametric)->Arg(8)->Arg(12)->Arg(16);

void BM_SolenoidBasis(benchmark::State& state) {
  const ActionSpec action = models::solenoid();
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(basic_form_basis(action, {1, d}));
}
BENCHMARK(BM_SolenoidBasis)->DenseRange(0, 4);

void BM_RotationBasis(benchmark::State& state) {
  const ActionSpec action = models::rotation();
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(basic_form_basis(action, {1, d}));
}
BENCHMARK(BM_RotationBasis)->DenseRange(2, 6, 2);

void BM_SolenoidCohomology(benchmark::State& state) {
  const ActionSpec action = models::solenoid();
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(truncated_basic_cohomology(action, d));
}
BENCHMARK(BM_SolenoidCohomology)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Z2Criterion(benchmark::State& state) {
  auto grid = z2_default_grid();
  Plot p1 = builtin_plot("z2_p1", grid), p2 = builtin_plot("z2_p2", grid);
  Form alpha = parse_form("(x) dx", models::x1());
  for (auto _ : state) benchmark::DoNotOptimize(criterion_check(p1, p2, alpha, kSymbolicTolerance));
}
BENCHMARK(BM_Z2Criterion);

}  // namespace

BENCHMARK_MAIN();
