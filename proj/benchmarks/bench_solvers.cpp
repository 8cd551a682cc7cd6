#include <benchmark/benchmark.h>

#include "mc4/solvers.hpp"

using namespace mc4;

namespace {

void BM_Closure(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(closure(RelationSet{static_cast<std::uint16_t>(state.iterations() | 0x8001)}));
}
BENCHMARK(BM_Closure);

void BM_EnumerateExpressive(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_expressive());
}
BENCHMARK(BM_EnumerateExpressive)->Unit(benchmark::kMillisecond);

template <Verdict (*Solve)(const ConstraintNetwork&)>
void run_planted(benchmark::State& state, RelationSet profile) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const ConstraintNetwork net = planted_network(n, 1.0, profile, 17);
    for (auto _ : state) benchmark::DoNotOptimize(Solve(net).consistent);
    state.SetComplexityN(state.range(0));
}

void BM_M99Planted(benchmark::State& state) { run_planted<solve_m99>(state, catalog::m99); }
void BM_M81Planted(benchmark::State& state) { run_planted<solve_m81>(state, catalog::m81); }
BENCHMARK(BM_M99Planted)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_M81Planted)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oNSquared);

void BM_M99Random(benchmark::State& state) {
    const ConstraintNetwork net = random_network(static_cast<std::size_t>(state.range(0)), 0.05, catalog::m99, 3);
    for (auto _ : state) benchmark::DoNotOptimize(solve_m99(net).consistent);
}
BENCHMARK(BM_M99Random)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_PathConsistency(benchmark::State& state) {
    const ConstraintNetwork net = planted_network(static_cast<std::size_t>(state.range(0)), 0.5, catalog::full, 9);
    for (auto _ : state) benchmark::DoNotOptimize(path_consistency(net).ok);
}
BENCHMARK(BM_PathConsistency)->Arg(25)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_BacktrackingPlanted(benchmark::State& state) {
    const ConstraintNetwork net = planted_network(static_cast<std::size_t>(state.range(0)), 0.5, catalog::full, 9);
    for (auto _ : state) benchmark::DoNotOptimize(solve_backtracking(net).consistent);
}
BENCHMARK(BM_BacktrackingPlanted)->Arg(10)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_Oracle(benchmark::State& state) {
    const ConstraintNetwork net = random_network(5, 0.8, catalog::full, 4);
    for (auto _ : state) benchmark::DoNotOptimize(solve_oracle(net).consistent);
}
BENCHMARK(BM_Oracle);

} // namespace
BENCHMARK_MAIN();
