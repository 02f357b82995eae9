#include <benchmark/benchmark.h>

#include <vector>

#include "specladder/ladder.hpp"
#include "specladder/models.hpp"
#include "specladder/oracle.hpp"
#include "specladder/solver.hpp"

using namespace specladder;

namespace {

void BM_ConstantGapExact(benchmark::State& state) {
    for (auto _ : state) {
        SpectrumPairExact pair = solve_constant_gap<Rat>(Rat(1, 2), 64);
        benchmark::DoNotOptimize(pair.s.data());
    }
}
BENCHMARK(BM_ConstantGapExact);

void BM_TridiagonalEig(benchmark::State& state) {
    const std::size_t points = static_cast<std::size_t>(state.range(0));
    const Grid grid{-12.0, 12.0, points};
    const TridiagonalOperator op =
        discretize_potential(grid, [](double q) { return q * q; });
    for (auto _ : state) {
        std::vector<double> evals = eig_tridiagonal(op, 3);
        benchmark::DoNotOptimize(evals.data());
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TridiagonalEig)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

void BM_OscillatorRadial(benchmark::State& state) {
    const Grid grid{0.0, 12.0, 3000};
    for (auto _ : state) {
        std::vector<double> evals = solve_oscillator_radial(3, 0, grid, 3);
        benchmark::DoNotOptimize(evals.data());
    }
}
BENCHMARK(BM_OscillatorRadial)->Unit(benchmark::kMillisecond);

void BM_PerturbedHoBasis(benchmark::State& state) {
    for (auto _ : state) {
        std::vector<double> evals = solve_perturbed_ho(1e-4, 60, 4);
        benchmark::DoNotOptimize(evals.data());
    }
}
BENCHMARK(BM_PerturbedHoBasis)->Unit(benchmark::kMillisecond);

void BM_CheckPairLong(benchmark::State& state) {
    std::vector<double> c_sq(1000);
    for (std::size_t k = 0; k < c_sq.size(); ++k)
        c_sq[k] = 0.5 * static_cast<double>(k + 1);
    const SpectrumPair pair = spectrum_from_coeff_sq(c_sq);
    for (auto _ : state) {
        ConsistencyReport report = check_pair(pair);
        benchmark::DoNotOptimize(report.consistent);
    }
}
BENCHMARK(BM_CheckPairLong);

}  // namespace

BENCHMARK_MAIN();
