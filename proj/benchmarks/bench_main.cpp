#include <benchmark/benchmark.h>

#include <cmath>

#include "fracdirac/kernel.hpp"
#include "fracdirac/solution.hpp"
#include "fracdirac/spectral.hpp"

using namespace fracdirac;

namespace {

// args: alpha x 10, r x 100
void BM_KernelWright(benchmark::State& state) {
  const KernelQuery q{state.range(0) / 10.0, 1, state.range(1) / 100.0, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(kernel_wright(q));
}
BENCHMARK(BM_KernelWright)->Args({25, 50})->Args({25, 400})->Args({40, 100})->Args({50, 400});

void BM_KernelQuadrature(benchmark::State& state) {
  const KernelQuery q{state.range(0) / 10.0, 3, 2.0, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(kernel_quadrature(q));
}
BENCHMARK(BM_KernelQuadrature)->Arg(25)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_KernelMellinBarnes(benchmark::State& state) {
  const KernelQuery q{state.range(0) / 10.0, 2, 1.0, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(kernel_mellin_barnes(q));
}
BENCHMARK(BM_KernelMellinBarnes)->Arg(25)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_WrightTable(benchmark::State& state) {
  const WrightKernel k(3.0, 2);
  double r = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(k(r, cplx{1.0, 0.0}));
    r = r < 8.0 ? r + 0.01 : 0.0;
  }
}
BENCHMARK(BM_WrightTable);

void BM_FftRoundTrip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridSpec g{n, static_cast<int>(state.range(1)), 10.0};
  MultivectorField f(g);
  for (std::size_t p = 0; p < f.points(); ++p) {
    const auto x = g.position(p);
    double r2 = 0.0;
    for (int i = 0; i < n; ++i) r2 += x[i] * x[i];
    f.coeff(p, 0) = std::exp(-r2);
    f.coeff(p, 1) = x[0] * std::exp(-r2);
  }
  for (auto _ : state) benchmark::DoNotOptimize(fft_inverse(fft_forward(f)));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(g.total_points()));
}
BENCHMARK(BM_FftRoundTrip)->Args({1, 1024})->Args({2, 128})->Args({3, 32})->Unit(benchmark::kMicrosecond);

void BM_SolutionSpectral(benchmark::State& state) {
  const SkewSetup s = validate_params(2.5, 0.5);
  const GridSpec g{static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 20.0};
  for (auto _ : state) benchmark::DoNotOptimize(solution_field_spectral(s, g, 1.0));
}
BENCHMARK(BM_SolutionSpectral)->Args({1, 1024})->Args({2, 128})->Unit(benchmark::kMicrosecond);

void BM_SolutionPointwise(benchmark::State& state) {
  const SkewSetup s = validate_params(2.5, 0.5);
  const GridSpec g{1, static_cast<int>(state.range(0)), 20.0};
  for (auto _ : state) benchmark::DoNotOptimize(solution_field_projected(s, g, 1.0));
}
BENCHMARK(BM_SolutionPointwise)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

void BM_HilbertSingular(benchmark::State& state) {
  const GridSpec g{1, static_cast<int>(state.range(0)), 20.0};
  MultivectorField f(g);
  for (std::size_t p = 0; p < f.points(); ++p) {
    const double x = g.position(p)[0];
    f.coeff(p, 0) = std::exp(-x * x);
  }
  for (auto _ : state) benchmark::DoNotOptimize(apply_hilbert_singular(f, 1e-3));
}
BENCHMARK(BM_HilbertSingular)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
