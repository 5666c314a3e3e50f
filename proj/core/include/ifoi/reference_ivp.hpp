#pragma once

#include <cstddef>
#include <vector>

#include "ifoi/grid_function.hpp"
#include "ifoi/solver.hpp"

namespace ifoi {

/// Classical RK4 samples of u and u' at a fixed stride.
struct Trajectory {
    double h = 0.0;
    std::vector<double> u;
    std::vector<double> du;

    /// Cubic Hermite interpolation between recorded nodes.
    double value_at(double x) const;
    /// Derivative of the same interpolant.
    double slope_at(double x) const;
    double end() const noexcept { return h * static_cast<double>(u.size() - 1); }
};

/// Integrates u'' = rhs(x, u) as the first-order system (u, u') with
/// classical RK4 on `steps` steps of [0, length], recording every
/// `record_every`-th node.
Trajectory rk4_trajectory(const IvpProblem& problem, std::size_t steps,
                          std::size_t record_every, double length = 1.0);

/// RK4 solution on the n-interval grid of [0, 1], `substeps` RK4 steps per
/// grid interval.
GridFunction rk4_solve(const IvpProblem& problem, std::size_t n, std::size_t substeps = 1);

}  // namespace ifoi
