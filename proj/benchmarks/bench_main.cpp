#include <benchmark/benchmark.h>

#include <vector>

#include "hilfer/hilfer.hpp"

using namespace hilfer;

namespace {

void BM_ProductIntegratorApply(benchmark::State& state, double mu) {
    const auto N = static_cast<std::size_t>(state.range(0));
    const MeshPtr m = build_graded_mesh(builtin_kernel("sqrt_shift", 0.0, 1.0), N, 2.0);
    const ProductIntegrator q(m, 0.5, mu);
    const std::vector<double> v(m->size(), 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(q.apply(v));
    state.SetComplexityN(state.range(0));
}
BENCHMARK_CAPTURE(BM_ProductIntegratorApply, unweighted, 0.0)
    ->RangeMultiplier(2)
    ->Range(128, 1024)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNSquared);
BENCHMARK_CAPTURE(BM_ProductIntegratorApply, weighted, 0.25)
    ->RangeMultiplier(2)
    ->Range(128, 1024)
    ->Unit(benchmark::kMillisecond)
    ->Complexity(benchmark::oNSquared);

void BM_SolveCatalog(benchmark::State& state) {
    const CatalogEntry e = builtin_catalog().at(static_cast<std::size_t>(state.range(0)));
    state.SetLabel(e.name);
    for (auto _ : state) benchmark::DoNotOptimize(solve_cauchy(e.problem, e.config));
}
BENCHMARK(BM_SolveCatalog)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_SolveLinearMesh(benchmark::State& state) {
    const ProblemSpec p(builtin_kernel("linear", 0.0, 1.0), FractionalOrder(0.5, 1.0), 1.0, RhsSpec::linear_in_u(0.5));
    SolveConfig cfg;
    cfg.mesh_N = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(solve_cauchy(p, cfg));
}
BENCHMARK(BM_SolveLinearMesh)->RangeMultiplier(2)->Range(128, 1024)->Unit(benchmark::kMillisecond);

void BM_MittagLeffler(benchmark::State& state) {
    const double alpha = static_cast<double>(state.range(0)) / 10.0;
    const double z = static_cast<double>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(mittag_leffler(alpha, 1.0, z));
}
BENCHMARK(BM_MittagLeffler)->ArgsProduct({{3, 5, 9}, {-1, 1, 5}});

}  // namespace

BENCHMARK_MAIN();
