#include <benchmark/benchmark.h>

#include <cmath>

#include "einwarp/catalog.hpp"
#include "einwarp/lichnerowicz.hpp"
#include "einwarp/solver.hpp"

using namespace einwarp;

static void BM_ProfileJet(benchmark::State& state) {
    const Profile p = Profile::sum(
        {-2.0 / 3.0, -2.0},
        {Profile::pow_of(Profile::sech(1.0, 1.0), 4.0),
         Profile::product(1.0, {Profile::pow_of(Profile::sech(1.0, 1.0), 4.0),
                                Profile::cosh(1.0, 2.0)})});
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(p.eval_jet2(x));
        x = x < 3.0 ? x + 1e-4 : 0.1;
    }
}
BENCHMARK(BM_ProfileJet);

static void BM_VerifyCatalogEntry(benchmark::State& state) {
    const CatalogEntry& e = catalog_find("ex1");
    for (auto _ : state) benchmark::DoNotOptimize(verify(e.ansatz, e.default_grid));
}
BENCHMARK(BM_VerifyCatalogEntry);

static void BM_FullTensorResidual(benchmark::State& state) {
    const CatalogEntry& e = catalog_find("ex1");
    Eigen::VectorXd p(5);
    p << 0.3, -0.2, 0.5, 0.1, -0.4;
    for (auto _ : state) benchmark::DoNotOptimize(full_tensor_residual(e.ansatz, p));
}
BENCHMARK(BM_FullTensorResidual);

static void BM_SolvePotential(benchmark::State& state) {
    ConstructionSpec spec;
    spec.base = {3, 1.0, Profile::constant(1.0)};
    spec.f = Profile::exponential(1.0, 1.0);
    spec.params = {1.0, std::sqrt(2.0), 1.0, -1.0};
    spec.m = 2;
    spec.initial = {0.0, 0.0, 0.0};  // tanh branch, genuinely adaptive
    spec.grid = {-2.0, 2.0, 401};
    spec.control.tol = 1e-8;
    for (auto _ : state) benchmark::DoNotOptimize(solve_potential(spec));
}
BENCHMARK(BM_SolvePotential);

static void BM_LichnerowiczResidualGrid(benchmark::State& state) {
    const CatalogEntry& e = catalog_find("ex2");
    const Interval range{e.default_grid.xi_min, e.default_grid.xi_max, false, false};
    const LichnerowiczData L = build_lichnerowicz(e.ansatz, range);
    const auto xs = e.default_grid.points();
    for (auto _ : state) {
        double sup = 0.0;
        for (const double x : xs)
            sup = std::max(sup, std::abs(pde_residual(L, e.ansatz.base, x)));
        benchmark::DoNotOptimize(sup);
    }
}
BENCHMARK(BM_LichnerowiczResidualGrid);

BENCHMARK_MAIN();
