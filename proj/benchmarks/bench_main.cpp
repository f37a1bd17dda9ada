#include <benchmark/benchmark.h>

#include "qlines/construction.hpp"
#include "qlines/verify.hpp"

using namespace qlines;

namespace {

void BM_HyperplaneScan(benchmark::State& state) {
    const AdditiveLineCode code = all_lines_code(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(hyperplane_inside_counts(code, Strategy::HyperplaneScan));
}
BENCHMARK(BM_HyperplaneScan)->DenseRange(6, 9);

void BM_DualAccumulation(benchmark::State& state) {
    const AdditiveLineCode code = all_lines_code(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(hyperplane_inside_counts(code, Strategy::DualAccumulation));
}
BENCHMARK(BM_DualAccumulation)->DenseRange(6, 9);

void BM_OracleMinWeight(benchmark::State& state) {
    const auto generator =
        concatenated_binary_generator(three_cover_code(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_min_weight(generator));
}
BENCHMARK(BM_OracleMinWeight)->Arg(5)->Arg(7)->Arg(9);

void BM_PartialSpread(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(partial_spread_outside_fano(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PartialSpread)->Arg(7)->Arg(9)->Arg(11);

void BM_EnumerateLines(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate_lines(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateLines)->Arg(8)->Arg(10);

void BM_ExactCover(benchmark::State& state) {
    const std::vector<Point> fano{1, 2, 3, 4, 5, 6, 7};
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_cover_partial_spread(static_cast<int>(state.range(0)), fano));
}
BENCHMARK(BM_ExactCover)->Arg(5)->Arg(7);

} // namespace

BENCHMARK_MAIN();
