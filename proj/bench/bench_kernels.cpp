// Serial reference kernels against their OpenMP counterparts.

#include "ssy/certifier.hpp"
#include "ssy/epsilon_optimizer.hpp"
#include "ssy/report.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace ssy;

namespace {

Execution mode(const benchmark::State& state)
{
    return state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
}

void label(benchmark::State& state)
{
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_SweepRows(benchmark::State& state)
{
    const SweepSpec spec{{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12}, 0.0, 1.0, static_cast<int>(state.range(1)), {}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(sweep_rows(spec, mode(state)));
    }
    state.SetItemsProcessed(state.iterations() * 11 * state.range(1));
    label(state);
}
BENCHMARK(BM_SweepRows)->ArgsProduct({{0, 1}, {1024, 16384}})->Unit(benchmark::kMillisecond);

void BM_EvaluateBoxes(benchmark::State& state)
{
    const Claim claim{"bench", ClaimFunction::CYoung, ClaimFunction::CHolder};
    std::vector<PendingBox> boxes;
    const auto count = static_cast<int>(state.range(1));
    for (int i = 0; i < count; ++i) {
        const int n = 2 + i % 11;
        const double top = 0.99 * std::sqrt(2.0 / n);
        const int k = i / 11;
        const int per_n = count / 11 + 1;
        boxes.push_back({n, top * k / per_n, top * (k + 1) / per_n, 0});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_boxes(claim, boxes, mode(state)));
    }
    state.SetItemsProcessed(state.iterations() * count);
    label(state);
}
BENCHMARK(BM_EvaluateBoxes)->ArgsProduct({{0, 1}, {4096, 65536}})->Unit(benchmark::kMillisecond);

void BM_GridSeed(benchmark::State& state)
{
    const auto target = static_cast<Target>(state.range(1));
    const ParamPoint p{5, 0.3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(grid_seed(target, p, 32, 0.0, mode(state)));
    }
    state.SetLabel(std::string(state.range(0) == 0 ? "serial " : "parallel ") + to_string(target));
}
BENCHMARK(BM_GridSeed)->ArgsProduct({{0, 1}, {0, 1, 2}})->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
