#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "cusplab/cusp_state.hpp"
#include "cusplab/density.hpp"
#include "cusplab/homokernel.hpp"
#include "cusplab/spectral.hpp"

namespace {

using namespace cusplab;

// Partial-wave amplitude tables dominate spectrum assembly; this isolates the
// projection GEMM at a fixed angular resolution.
void BM_AmplitudeTable(benchmark::State& bench) {
    const CuspState state(1.0, 0.5, Symmetry::symmetric);
    const auto grid = RadialGrid::gauss(static_cast<int>(bench.range(0)), 14.0);
    for (auto _ : bench) {
        auto table = amplitude_table(state, 16, grid, 32);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_AmplitudeTable)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

// One channel end to end: amplitudes, weighting, SVD.
void BM_ChannelSpectrum(benchmark::State& bench) {
    const CuspState state(1.0, 0.5, Symmetry::symmetric);
    const auto grid = RadialGrid::gauss(static_cast<int>(bench.range(0)), 14.0);
    for (auto _ : bench) {
        auto spectrum = channel_spectrum(state, 0, grid, 0);
        benchmark::DoNotOptimize(spectrum);
    }
}
BENCHMARK(BM_ChannelSpectrum)->Arg(96)->Arg(160)->Unit(benchmark::kMillisecond);

// Full assembly at reduced size, without the half-resolution re-run.
void BM_AssembleSpectrum(benchmark::State& bench) {
    const CuspState state(1.0, 0.5, Symmetry::symmetric);
    const auto grid = RadialGrid::gauss(96, 14.0);
    AssembleOptions options;
    options.l_max = static_cast<int>(bench.range(0));
    options.refine = false;
    for (auto _ : bench) {
        auto series = assemble_spectrum(state, grid, options);
        benchmark::DoNotOptimize(series);
    }
}
BENCHMARK(BM_AssembleSpectrum)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

// Graded composite discretization of the |x - y| line kernel plus its SVD.
void BM_NystromLineKernel(benchmark::State& bench) {
    const HomogeneousKernelSpec spec(1.0, 1);
    for (auto _ : bench) {
        auto series = nystrom_1d_spectrum(spec, static_cast<int>(bench.range(0)), 6.0);
        benchmark::DoNotOptimize(series);
    }
}
BENCHMARK(BM_NystromLineKernel)->Arg(128)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

// Windowed order statistics over a long synthetic power-law tail.
void BM_PlateauEstimate(benchmark::State& bench) {
    const std::size_t count = 200000;
    std::vector<double> tail(count);
    for (std::size_t k = 1; k <= count; ++k)
        tail[k - 1] = 1.7 * std::pow(static_cast<double>(k), -8.0 / 3.0);
    for (auto _ : bench) {
        auto estimate = plateau_estimate(tail, 3.0 / 8.0, 1000, 100000);
        benchmark::DoNotOptimize(estimate);
    }
}
BENCHMARK(BM_PlateauEstimate);

// Radial quadrature of the weighted model coefficient, including the
// built-in doubling check.
void BM_ModelCoefficient(benchmark::State& bench) {
    const HomogeneousKernelSpec spec(1.0, 3);
    const auto a = WeightDescriptor::gaussian(0.5);
    const ModelWeightProfile profile(2, {{0.5, 1.0}});
    for (auto _ : bench) {
        double value = model_coefficient(spec, a, profile);
        benchmark::DoNotOptimize(value);
    }
}
BENCHMARK(BM_ModelCoefficient);

}  // namespace

BENCHMARK_MAIN();
