#pragma once

#include <functional>
#include <vector>

#include "ifoi/boundary.hpp"
#include "ifoi/cases.hpp"
#include "ifoi/grid_function.hpp"
#include "ifoi/solver.hpp"

namespace ifoi::shooting {

using IvpSolver = std::function<GridFunction(const IvpProblem&)>;

/// u = u1 + c u2 with u1 the particular solution (left value, zero slope)
/// and u2 the homogeneous one (zero value, unit slope).
struct ShootingPair {
    GridFunction u1;
    GridFunction u2;
    double c = 0.0;
};

/// Solves the two initial-value halves of `spec`. The left condition must be
/// Dirichlet. Solver errors propagate.
ShootingPair decompose(const cases::CaseSpec& spec, const IvpSolver& solver);

/// Second-order backward difference (3u_n - 4u_{n-1} + u_{n-2}) / (2h).
double backward_slope(const GridFunction& u);

/// Coefficient c that makes u1 + c u2 satisfy `right_bc`.
/// Throws SingularError when the denominator is below 1e-12 in magnitude.
double match_coefficient(const ShootingPair& pair, const BoundaryCondition& right_bc, double h);

/// u1 + c u2 pointwise.
GridFunction combine(const ShootingPair& pair, double c);

/// Right boundary residual: u(1) - value for Dirichlet, slope + B u(1) - C for Robin.
double right_residual(const GridFunction& u, const BoundaryCondition& right_bc);

/// decompose + match_coefficient + combine.
GridFunction solve_bvp(const cases::CaseSpec& spec, const IvpSolver& solver);

/// IVP solver handle backed by IFOI. When `traces` is non-null the trace of
/// every solve is appended to it (decompose solves u1 first, then u2).
IvpSolver ifoi_solver(AlphaPartition partition, std::size_t n, SolverOptions options = {},
                      std::vector<IfoiTrace>* traces = nullptr);

/// IVP solver handle backed by classical RK4 with `substeps` per grid interval.
IvpSolver rk4_solver(std::size_t n, std::size_t substeps = 1);

}  // namespace ifoi::shooting
