#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fuzzynn/corpus.hpp"
#include "fuzzynn/metrics.hpp"
#include "fuzzynn/nn_operator.hpp"
#include "fuzzynn/verify.hpp"

using namespace fuzzynn;

static void BM_Weights(benchmark::State& state) {
    const NodeGrid grid(0.0, 1.0, static_cast<int>(state.range(0)));
    const auto sigma = ramp();
    const auto xs = linspace(0.0, 1.0, 1024);
    for (auto _ : state) {
        for (double x : xs) benchmark::DoNotOptimize(weights(grid, sigma, x));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(xs.size()));
}
BENCHMARK(BM_Weights)->Arg(10)->Arg(1000);

// Weights without culling touch every node: linear in n.
static void BM_WeightsLiteral(benchmark::State& state) {
    const NodeGrid grid(0.0, 1.0, static_cast<int>(state.range(0)));
    const auto sigma = ramp();
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(weights(grid, sigma, U(rng), false));
}
BENCHMARK(BM_WeightsLiteral)->Arg(10)->Arg(1000);

// One table cell: max level error over the 10000-point grid.
static void BM_TableCell(benchmark::State& state) {
    const auto f = example_level_continuous().function;
    const auto xs = linspace(0.0, 1.0, 10000);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(measure_sup_error(f, ramp(), n, Metric::level, xs, {}, 0.6));
    }
}
BENCHMARK(BM_TableCell)->Arg(10)->Arg(1000)->Unit(benchmark::kMillisecond);

template <bool Endograph>
static void BM_RandomPairDistance(benchmark::State& state) {
    std::mt19937_64 rng(42);
    const int levels = static_cast<int>(state.range(0));
    const MetricOptions options{256, 1e-3};
    std::vector<std::pair<FuzzyNumber, FuzzyNumber>> pairs;
    for (int i = 0; i < 32; ++i) pairs.emplace_back(gen_fuzzy(rng, levels, 5.0), gen_fuzzy(rng, levels, 5.0));
    std::size_t i = 0;
    for (auto _ : state) {
        const auto& [u, v] = pairs[i++ % pairs.size()];
        if constexpr (Endograph) {
            benchmark::DoNotOptimize(endograph_distance(u, v, options));
        } else {
            benchmark::DoNotOptimize(sendograph_distance(u, v, options));
        }
    }
}
BENCHMARK_TEMPLATE(BM_RandomPairDistance, false)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);
BENCHMARK_TEMPLATE(BM_RandomPairDistance, true)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

// Nearly coincident regions are the hard case for the covering: almost every
// cell is a candidate for the maximum.
static void BM_NearlyEqualSendographs(benchmark::State& state) {
    const double g = 1.0 / static_cast<double>(state.range(0));
    const auto u = FuzzyNumber::from_levels([](double l) { return l * l; }, [](double l) { return 3.0 - l; });
    const auto v = FuzzyNumber::from_levels([](double l) { return l * l + 1e-4; }, [](double l) { return 3.0 - l; });
    for (auto _ : state) benchmark::DoNotOptimize(sendograph_distance(u, v, {256, g}));
}
BENCHMARK(BM_NearlyEqualSendographs)->Arg(100)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

static void BM_PointRegionDistance(benchmark::State& state) {
    std::mt19937_64 rng(3);
    const auto region = sendograph(gen_fuzzy(rng, static_cast<int>(state.range(0)), 5.0));
    std::uniform_real_distribution<double> X(-6.0, 6.0);
    std::uniform_real_distribution<double> L(0.0, 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(region.distance({X(rng), L(rng)}));
}
BENCHMARK(BM_PointRegionDistance)->Arg(16)->Arg(256);
BENCHMARK_MAIN();
