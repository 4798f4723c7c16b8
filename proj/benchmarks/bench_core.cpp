#include <benchmark/benchmark.h>

#include "reactlin/amplification.hpp"
#include "reactlin/dynamics.hpp"
#include "reactlin/rt_core.hpp"
#include "reactlin/spectra.hpp"

using namespace reactlin;

namespace {
const Mat2 kA1{-1, -8, 0, -3};
const Mat2 kA3{0.7, -4, 4, -4.7};
}  // namespace

static void BM_decompose(benchmark::State& st) {
  Mat2 a = kA1;
  for (auto _ : st) {
    benchmark::DoNotOptimize(a);
    benchmark::DoNotOptimize(decompose(a));
  }
}
BENCHMARK(BM_decompose);

static void BM_eigen_structure(benchmark::State& st) {
  const RTParams rt = decompose(kA1);
  for (auto _ : st) benchmark::DoNotOptimize(eigen_structure(rt));
}
BENCHMARK(BM_eigen_structure);

static void BM_transient_summary(benchmark::State& st) {
  const RTParams rt = decompose(kA1);
  for (auto _ : st) benchmark::DoNotOptimize(transient_summary(rt));
}
BENCHMARK(BM_transient_summary);

static void BM_rho_max_closed(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(rho_max_closed(kA1));
}
BENCHMARK(BM_rho_max_closed);

static void BM_rho_max_numeric(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(rho_max_numeric(kA1));
}
BENCHMARK(BM_rho_max_numeric)->Unit(benchmark::kMillisecond);

static void BM_rho_max_numeric_spiral(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(rho_max_numeric(kA3));
}
BENCHMARK(BM_rho_max_numeric_spiral)->Unit(benchmark::kMillisecond);

static void BM_matrix_exponential(benchmark::State& st) {
  double t = 0.5;
  for (auto _ : st) {
    benchmark::DoNotOptimize(t);
    benchmark::DoNotOptimize(matrix_exponential(kA3, t));
  }
}
BENCHMARK(BM_matrix_exponential);

static void BM_nonaut_log_slope(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(nonaut_log_slope({kA3, -4.0}, {1, 0}, 1e-3, 50.0));
}
BENCHMARK(BM_nonaut_log_slope)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
