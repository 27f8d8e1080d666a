// Sequential vs OpenMP timings of the exhaustive kernels.

#include "leafword/caterpillar.hpp"
#include "leafword/graph.hpp"
#include "leafword/subtree_oracle.hpp"
#include "leafword/verify.hpp"

#include <benchmark/benchmark.h>

using namespace leafword;

static Execution mode(const benchmark::State& state) {
    return state.range(0) ? Execution::parallel : Execution::sequential;
}

static void BM_OracleWheel(benchmark::State& state) {
    const auto g = wheel(static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(leaf_function_bruteforce(g, {kMaxOracleVertices, mode(state)}));
}
BENCHMARK(BM_OracleWheel)->ArgsProduct({{0, 1}, {12, 16}})->Unit(benchmark::kMillisecond);

static void BM_OracleFk2(benchmark::State& state) {
    const auto g = fk_tree(2);
    for (auto _ : state) benchmark::DoNotOptimize(leaf_function_bruteforce(g, {kMaxOracleVertices, mode(state)}));
}
BENCHMARK(BM_OracleFk2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_PrunedFk3(benchmark::State& state) {
    const auto g = fk_tree(3);
    for (auto _ : state) benchmark::DoNotOptimize(leaf_function_pruned(g));
}
BENCHMARK(BM_PrunedFk3)->Unit(benchmark::kMillisecond);

static void BM_HasseCovers(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(hasse_covers(10, mode(state)));
}
BENCHMARK(BM_HasseCovers)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_VerifyWordSuite(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(run_suite(Suite::theorem53, 10, mode(state)));
}
BENCHMARK(BM_VerifyWordSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
