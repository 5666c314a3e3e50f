#include <benchmark/benchmark.h>

#include "ifoi/cases.hpp"
#include "ifoi/fdm.hpp"
#include "ifoi/shooting.hpp"

namespace {

using namespace ifoi;

// Table 1 resolutions; the FDM side should stay essentially flat.
void BM_FdmCase3(benchmark::State& state) {
    const auto spec = cases::get_case(cases::CaseId::case3);
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fdm::fdm_linear(spec, n));
    }
}
BENCHMARK(BM_FdmCase3)->Arg(40)->Arg(80)->Arg(200);

void BM_IfoiCase3(benchmark::State& state) {
    const auto spec = cases::get_case(cases::CaseId::case3);
    const auto n = static_cast<std::size_t>(state.range(0));
    SolverOptions options;
    options.scheme = fracops::Scheme::abm;
    const auto solver = shooting::ifoi_solver(spec.default_partition, n, options);
    for (auto _ : state) {
        benchmark::DoNotOptimize(shooting::solve_bvp(spec, solver));
    }
}
BENCHMARK(BM_IfoiCase3)->Arg(40)->Arg(80)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_NewtonCase4(benchmark::State& state) {
    const auto spec = cases::get_case(cases::CaseId::case4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fdm::fdm_newton(spec, 50));
    }
}
BENCHMARK(BM_NewtonCase4);

void BM_IfoiCase4Picard(benchmark::State& state) {
    const auto spec = cases::get_case(cases::CaseId::case4);
    SolverOptions options;
    options.scheme = fracops::Scheme::abm;
    const auto solver = shooting::ifoi_solver(spec.default_partition, 50, options);
    for (auto _ : state) {
        benchmark::DoNotOptimize(shooting::solve_bvp(spec, solver));
    }
}
BENCHMARK(BM_IfoiCase4Picard)->Unit(benchmark::kMillisecond);

}  // namespace
