#include "ifoi/solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ifoi/error.hpp"

namespace ifoi {

namespace {

void guard(std::span<const double> values, double bound, int iteration) {
    for (double v : values) {
        if (!std::isfinite(v) || std::abs(v) > bound) {
            throw DivergenceError("IFOI diverged: intermediate value out of range",
                                  std::isfinite(v) ? std::abs(v) : HUGE_VAL, iteration);
        }
    }
}

struct Pass {
    GridFunction forcing;
    std::vector<StageSnapshot> stages;
};

Pass staged_pass(const IvpProblem& problem, const AlphaPartition& partition,
                 std::span<const double> u, double h, const SolverOptions& options,
                 int iteration) {
    const std::size_t nodes = u.size();
    std::vector<double> rhs(nodes);
    for (std::size_t j = 0; j < nodes; ++j) {
        rhs[j] = problem.rhs(static_cast<double>(j) * h, u[j]);
    }
    guard(rhs, options.divergence_bound, iteration);
    Pass pass{GridFunction(h, std::move(rhs)), {}};
    pass.stages.reserve(partition.stage_count());

    GridFunction current = pass.forcing;
    for (std::size_t k = 1; k <= partition.stage_count(); ++k) {
        current = fracops::integrate(options.scheme, current, partition.stage_order(k),
                                     options.memory, options.abm);
        guard(current.values(), options.divergence_bound, iteration);

        std::vector<double> shifted(nodes);
        for (std::size_t j = 0; j < nodes; ++j) {
            shifted[j] = problem.u0 + problem.s0 * current.x(j) + current[j];
        }
        pass.stages.push_back(
            {partition.cumulative_orders()[k], GridFunction(h, std::move(shifted))});
    }
    return pass;
}

}  // namespace

IvpSolution solve_ivp(const IvpProblem& problem, const AlphaPartition& partition,
                      std::size_t n, const SolverOptions& options) {
    if (n < 8) {
        throw DomainError("solve_ivp: need at least 8 grid intervals");
    }
    if (!problem.rhs) {
        throw DomainError("solve_ivp: missing right-hand side");
    }
    const double h = 1.0 / static_cast<double>(n);
    std::vector<double> u(n + 1, problem.u0);

    double update = HUGE_VAL;
    for (int iteration = 1; iteration <= options.picard_max_iterations; ++iteration) {
        Pass pass = staged_pass(problem, partition, u, h, options, iteration);
        const auto next = pass.stages.back().values.values();

        update = 0.0;
        for (std::size_t j = 0; j <= n; ++j) {
            update = std::max(update, std::abs(next[j] - u[j]));
        }
        std::copy(next.begin(), next.end(), u.begin());

        if (!problem.depends_on_u || update < options.picard_tolerance) {
            IvpSolution result{pass.stages.back().values, {}};
            result.trace.forcing = std::move(pass.forcing);
            result.trace.stages = std::move(pass.stages);
            result.trace.picard_iterations = iteration;
            return result;
        }
    }
    throw NonConvergenceError("IFOI Picard iteration did not converge in " +
                                  std::to_string(options.picard_max_iterations) + " iterations",
                              update, options.picard_max_iterations);
}

double compose_check(const GridFunction& f, const AlphaPartition& partition,
                     fracops::Scheme scheme) {
    GridFunction staged = f;
    for (std::size_t k = 1; k <= partition.stage_count(); ++k) {
        staged = fracops::integrate(scheme, staged, partition.stage_order(k));
    }
    const GridFunction direct = fracops::integrate(scheme, f, fracops::FracOrder(-2.0));
    return sup_distance(staged, direct);
}

}  // namespace ifoi
