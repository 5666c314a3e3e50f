#include <benchmark/benchmark.h>

#include <cmath>

#include "ifoi/fracops.hpp"

namespace {

using namespace ifoi;

GridFunction smooth_input(std::size_t n) {
    return GridFunction::sample(n, [](double x) { return std::exp(-10.0 * (x - 0.7) * (x - 0.7)); });
}

void BM_GlApply(benchmark::State& state) {
    const auto f = smooth_input(static_cast<std::size_t>(state.range(0)));
    const fracops::FracOrder alpha(-0.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fracops::gl_apply(f, alpha));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GlApply)->RangeMultiplier(2)->Range(64, 2048)->Complexity(benchmark::oNSquared);

void BM_GlApplyTruncated(benchmark::State& state) {
    const auto f = smooth_input(static_cast<std::size_t>(state.range(0)));
    const fracops::FracOrder alpha(-0.2);
    const auto policy = fracops::MemoryPolicy::truncated(0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fracops::gl_apply(f, alpha, policy));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_GlApplyTruncated)->RangeMultiplier(2)->Range(128, 2048)->Complexity(benchmark::oN);

void BM_RectApply(benchmark::State& state) {
    const auto f = smooth_input(static_cast<std::size_t>(state.range(0)));
    const fracops::FracOrder alpha(-0.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fracops::rect_apply(f, alpha));
    }
}
BENCHMARK(BM_RectApply)->RangeMultiplier(2)->Range(64, 2048);

void BM_AbmApply(benchmark::State& state) {
    const auto f = smooth_input(static_cast<std::size_t>(state.range(0)));
    const fracops::FracOrder alpha(-0.2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fracops::abm_apply(f, alpha));
    }
}
BENCHMARK(BM_AbmApply)->RangeMultiplier(2)->Range(64, 2048);

void BM_AbmSolve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const fracops::FracOrder alpha(-0.5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fracops::abm_solve([](double, double y) { return -y; }, 1.0, alpha,
                                                    1.0 / static_cast<double>(n), n));
    }
}
BENCHMARK(BM_AbmSolve)->RangeMultiplier(2)->Range(64, 2048);

}  // namespace
