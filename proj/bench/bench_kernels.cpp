// Serial reference vs OpenMP kernels on the three hot paths: tensor-grid
// DFT extraction, exact amplitude batches, and spectrum sweeps.

#include "scatter/greens.hpp"
#include "scatter/lattice.hpp"
#include "scatter/suites.hpp"
#include "scatter/torus.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace scatter;

DiskTuple bench_tuple(int n) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> radius(0.1, 0.6);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    DiskTuple w;
    for (int j = 0; j < n; ++j) w.push_back(DiskPoint::polar(radius(rng), angle(rng)));
    return w;
}

MediumParams bench_medium(int n) {
    std::mt19937_64 rng(9);
    return random_medium(rng, n);
}

void BM_FourierCoefficient(benchmark::State& state) {
    const auto exec = state.range(0) ? Exec::parallel : Exec::serial;
    const int n = static_cast<int>(state.range(1));
    const int grid = (n == 3) ? 32 : 64;
    const auto w = bench_tuple(n);
    std::vector<int> k(n, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(fourier_coefficient(w, k, grid, exec));
}

void BM_AmplitudeBatch(benchmark::State& state) {
    const auto exec = state.range(0) ? Exec::parallel : Exec::serial;
    const auto params = bench_medium(4);
    const auto points = enumerate_lattice(params.tau, params.tau[0] * 24);
    for (auto _ : state)
        benchmark::DoNotOptimize(amplitudes(params.r, points, exec));
}

void BM_SpectrumSweep(benchmark::State& state) {
    const auto exec = state.range(0) ? Exec::parallel : Exec::serial;
    const auto params = bench_medium(3);
    const auto g = synthesize(params, params.tau[0] * 16);
    std::vector<double> sigmas(1024);
    for (std::size_t i = 0; i < sigmas.size(); ++i) sigmas[i] = 0.01 * static_cast<double>(i);
    for (auto _ : state)
        benchmark::DoNotOptimize(spectrum_poly_sweep(g, sigmas, exec));
}

}  // namespace

BENCHMARK(BM_FourierCoefficient)
    ->ArgsProduct({{0, 1}, {2, 3}})
    ->ArgNames({"omp", "n"})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AmplitudeBatch)->Arg(0)->Arg(1)->ArgName("omp")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SpectrumSweep)->Arg(0)->Arg(1)->ArgName("omp")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
