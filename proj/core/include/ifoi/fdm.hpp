#pragma once

#include <cstddef>
#include <vector>

#include "ifoi/cases.hpp"
#include "ifoi/grid_function.hpp"

namespace ifoi::fdm {

/// Central-difference solve of u'' = rhs(x) with Dirichlet rows at the ends,
/// or the one-sided second-order Robin row at x = 1. The Robin row touches
/// u_{n-2}; it is folded into tridiagonal form using row n-1.
///
/// Requires n >= 4 and a right-hand side independent of u.
/// Throws SingularError on a vanishing pivot.
GridFunction fdm_linear(const cases::CaseSpec& spec, std::size_t n);

struct NewtonResult {
    GridFunction solution;
    /// Sup norm of every Newton update, in order.
    std::vector<double> update_norms;
    int iterations() const noexcept { return static_cast<int>(update_norms.size()); }
};

/// Newton iteration on F_j(U) = (U_{j-1} - 2U_j + U_{j+1})/h^2 - rhs(x_j, U_j)
/// with the tridiagonal Jacobian, starting from the linear interpolant of the
/// boundary values. Throws NonConvergenceError (carrying the last update
/// norm) after `max_iter` updates without reaching `tol`.
NewtonResult fdm_newton(const cases::CaseSpec& spec, std::size_t n, double tol = 1e-10,
                        int max_iter = 50);

}  // namespace ifoi::fdm
