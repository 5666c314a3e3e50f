#include "ifoi/shooting.hpp"

#include <cmath>

#include "ifoi/error.hpp"
#include "ifoi/reference_ivp.hpp"

namespace ifoi::shooting {

namespace {
constexpr double kSingularThreshold = 1e-12;
}

ShootingPair decompose(const cases::CaseSpec& spec, const IvpSolver& solver) {
    if (spec.left_bc.is_robin()) {
        throw DomainError("shooting: the left condition must be Dirichlet");
    }
    const IvpProblem particular{spec.rhs, spec.left_bc.value, 0.0, spec.depends_on_u};
    const IvpProblem homogeneous{spec.homogeneous_rhs, 0.0, 1.0, spec.depends_on_u};
    ShootingPair pair{solver(particular), solver(homogeneous), 0.0};
    if (!pair.u1.same_grid(pair.u2)) {
        throw DomainError("shooting: IVP halves returned different grids");
    }
    return pair;
}

double backward_slope(const GridFunction& u) {
    if (u.size() < 3) {
        throw DomainError("backward_slope: need at least three nodes");
    }
    const std::size_t n = u.intervals();
    return (3.0 * u[n] - 4.0 * u[n - 1] + u[n - 2]) / (2.0 * u.h());
}

double match_coefficient(const ShootingPair& pair, const BoundaryCondition& right_bc, double h) {
    if (!pair.u1.same_grid(pair.u2)) {
        throw DomainError("match_coefficient: grids differ");
    }
    const std::size_t n = pair.u1.intervals();
    double numerator = 0.0;
    double denominator = 0.0;
    if (right_bc.is_robin()) {
        const auto slope = [&](const GridFunction& u) {
            return (3.0 * u[n] - 4.0 * u[n - 1] + u[n - 2]) / (2.0 * h);
        };
        const double weight = right_bc.robin_weight;
        numerator = right_bc.value - slope(pair.u1) - weight * pair.u1.back();
        denominator = slope(pair.u2) + weight * pair.u2.back();
    } else {
        numerator = right_bc.value - pair.u1.back();
        denominator = pair.u2.back();
    }
    if (std::abs(denominator) < kSingularThreshold) {
        throw SingularError("shooting: homogeneous solution satisfies the right condition");
    }
    return numerator / denominator;
}

GridFunction combine(const ShootingPair& pair, double c) {
    if (!pair.u1.same_grid(pair.u2)) {
        throw DomainError("combine: grids differ");
    }
    std::vector<double> out(pair.u1.size());
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = pair.u1[j] + c * pair.u2[j];
    }
    return GridFunction(pair.u1.h(), std::move(out));
}

double right_residual(const GridFunction& u, const BoundaryCondition& right_bc) {
    if (right_bc.is_robin()) {
        return backward_slope(u) + right_bc.robin_weight * u.back() - right_bc.value;
    }
    return u.back() - right_bc.value;
}

GridFunction solve_bvp(const cases::CaseSpec& spec, const IvpSolver& solver) {
    ShootingPair pair = decompose(spec, solver);
    pair.c = match_coefficient(pair, spec.right_bc, pair.u1.h());
    return combine(pair, pair.c);
}

IvpSolver ifoi_solver(AlphaPartition partition, std::size_t n, SolverOptions options,
                      std::vector<IfoiTrace>* traces) {
    return [partition = std::move(partition), n, options, traces](const IvpProblem& problem) {
        IvpSolution result = solve_ivp(problem, partition, n, options);
        if (traces != nullptr) {
            traces->push_back(std::move(result.trace));
        }
        return std::move(result.solution);
    };
}

IvpSolver rk4_solver(std::size_t n, std::size_t substeps) {
    return [n, substeps](const IvpProblem& problem) { return rk4_solve(problem, n, substeps); };
}

}  // namespace ifoi::shooting
