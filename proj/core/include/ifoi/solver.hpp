#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "ifoi/alpha_partition.hpp"
#include "ifoi/fracops.hpp"
#include "ifoi/grid_function.hpp"

namespace ifoi {

/// u'' = rhs(x, u) on [0, 1] with u(0) = u0, u'(0) = s0.
struct IvpProblem {
    std::function<double(double x, double u)> rhs;
    double u0 = 0.0;
    double s0 = 0.0;
    /// When set, the staged integration is wrapped in Picard iteration.
    bool depends_on_u = false;
};

struct StageSnapshot {
    /// Cumulative integration order S_k reached by this stage.
    double cumulative_order;
    /// u0 + s0 x + (staged integral after k stages).
    GridFunction values;
};

/// Curve family of the last Picard pass.
struct IfoiTrace {
    /// The right-hand side that seeded the last pass (S_0 = 0).
    std::optional<GridFunction> forcing;
    /// Stages 1..m in increasing cumulative order; the last one is the solution.
    std::vector<StageSnapshot> stages;
    int picard_iterations = 0;
};

struct SolverOptions {
    fracops::Scheme scheme = fracops::Scheme::abm;
    fracops::MemoryPolicy memory = fracops::MemoryPolicy::full();
    fracops::AbmOptions abm;
    double picard_tolerance = 1e-10;
    int picard_max_iterations = 200;
    /// Any intermediate value above this magnitude aborts with DivergenceError.
    double divergence_bound = 1e8;
};

struct IvpSolution {
    GridFunction solution;
    IfoiTrace trace;
};

/// Iterative fractional order integration of an initial-value problem.
///
/// Reaches the order-2 integral of the right-hand side through the stages of
/// `partition`, each a fractional integral of order alpha_k applied to the
/// previous stage, and adds u0 + s0 x. A u-dependent right-hand side is
/// resolved by Picard iteration from u = u0, stopping when the sup-norm
/// update drops below the tolerance.
///
/// Throws NonConvergenceError when Picard does not converge and
/// DivergenceError when a value exceeds the divergence bound.
IvpSolution solve_ivp(const IvpProblem& problem, const AlphaPartition& partition,
                      std::size_t n, const SolverOptions& options = {});

/// Sup-norm discrepancy between the staged composition of `partition`
/// applied to `f` and a single order -2 application of the same scheme.
double compose_check(const GridFunction& f, const AlphaPartition& partition,
                     fracops::Scheme scheme);

}  // namespace ifoi
