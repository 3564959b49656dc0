#include <benchmark/benchmark.h>

#include <cmath>

#include "laguerre/grid.hpp"
#include "laguerre/heat.hpp"
#include "laguerre/operators.hpp"
#include "laguerre/specfun.hpp"
#include "laguerre/spectral.hpp"
#include "laguerre/sweeps.hpp"

using namespace laguerre;

static void BM_BesselScaledSeries(benchmark::State& state) {
    double z = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_i_scaled(-0.75, z));
        z = z < 9.0 ? z * 1.1 : 0.1;
    }
}
BENCHMARK(BM_BesselScaledSeries);

static void BM_BesselScaledAsymptotic(benchmark::State& state) {
    double z = 20.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(bessel_i_scaled(-0.75, z));
        z = z < 1e6 ? z * 1.3 : 20.0;
    }
}
BENCHMARK(BM_BesselScaledAsymptotic);

static void BM_LaguerreFunctionSequence(benchmark::State& state) {
    const int kmax = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(laguerre_function_sequence(kmax, -0.75, 1.7));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LaguerreFunctionSequence)->Arg(16)->Arg(64)->Arg(256)->Complexity();

static void BM_HeatKernel(benchmark::State& state) {
    double t = 1e-3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(heat_kernel_1d(-0.75, t, 1.1, 0.9));
        t = t < 8.0 ? t * 1.7 : 1e-3;
    }
}
BENCHMARK(BM_HeatKernel);

static void BM_DeltaHeatKernel(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(delta_heat_kernel_1d(-0.75, 0.2, 1.1, 0.9));
    }
}
BENCHMARK(BM_DeltaHeatKernel);

static void BM_SemigroupKernelApply(benchmark::State& state) {
    const GridPtr grid = make_grid(
        make_log_gauss_axis(1e-4, 14.0, static_cast<int>(state.range(0)), 8));
    const NuVector nu{-0.75};
    const GridFunction f = GridFunction::sample(
        grid, [](double x) { return laguerre_function(1, -0.75, x); });
    for (auto _ : state) {
        benchmark::DoNotOptimize(semigroup_apply_kernel(f, nu, 0.3));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SemigroupKernelApply)->Arg(16)->Arg(32)->Arg(64)->Complexity();

static void BM_SpectralExpand(benchmark::State& state) {
    const GridPtr grid = make_grid(make_log_gauss_axis(1e-4, 20.0, 96, 16));
    const NuVector nu{-0.75};
    const GridFunction f = GridFunction::sample(grid, [](double x) {
        const double u = std::log(x);
        return std::exp(-0.5 * u * u);
    });
    for (auto _ : state) {
        benchmark::DoNotOptimize(expand(f, nu, static_cast<int>(state.range(0))));
    }
}
BENCHMARK(BM_SpectralExpand)->Arg(20)->Arg(60);

static void BM_BoundClaimReduced(benchmark::State& state) {
    ClaimRequest req;
    req.claim_id = "prop31iii";
    req.nu = NuVector::scalar(-0.75);
    req.full_grid = false;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_bound_claim(req));
    }
}
BENCHMARK(BM_BoundClaimReduced);

BENCHMARK_MAIN();
