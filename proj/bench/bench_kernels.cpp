// Serial reference vs OpenMP kernels: the pair sweep of the convex tests and
// the tau direct search. Arg 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include "perfrank/audit.hpp"
#include "perfrank/grid.hpp"
#include "perfrank/scores.hpp"
#include "perfrank/tau.hpp"

using namespace perfrank;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::Serial : Execution::Parallel; }

const PerformanceGrid& prior_grid() {
    static const auto g = make_grid(ConstraintSet::fixed_positive_prior(0.2));
    return g;
}

const PerformanceGrid& subsampled_grid() {
    static const auto g = pair_grid(make_grid(ConstraintSet::unconstrained()), AuditOptions{});
    return g;
}

void convex_bounds(benchmark::State& state, const char* id, const PerformanceGrid& grid) {
    const auto& score = catalog_entry(id).score;
    const auto lambdas = default_lambdas();
    for (auto _ : state) benchmark::DoNotOptimize(test_convex_bounds(score, grid, lambdas, mode(state)));
    state.counters["pairs"] = static_cast<double>(grid.size()) * (grid.size() - 1) / 2;
}

void BM_ConvexBoundsPrior(benchmark::State& state) { convex_bounds(state, "f1", prior_grid()); }
void BM_ConvexBoundsUnconstrained(benchmark::State& state) { convex_bounds(state, "accuracy", subsampled_grid()); }

void BM_TauSearch(benchmark::State& state) {
    SearchOptions o;
    o.execution = mode(state);
    o.use_equivalences = false;
    const auto& e = catalog_entry("mcc");
    const auto grid = make_grid(ConstraintSet::unconstrained());
    for (auto _ : state) benchmark::DoNotOptimize(optimize_tau(e, grid, Objective::Max, o));
}

}  // namespace

BENCHMARK(BM_ConvexBoundsPrior)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvexBoundsUnconstrained)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_TauSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
