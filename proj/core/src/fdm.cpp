#include "ifoi/fdm.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ifoi/error.hpp"
#include "ifoi/tridiagonal.hpp"

namespace ifoi::fdm {

namespace {

/// Coefficients of the last row when it references u_{n-2}.
struct FringeRow {
    double on_n2 = 0.0;
    double on_n1 = 0.0;
    double on_n = 0.0;
    double rhs = 0.0;
};

/// Eliminates the u_{n-2} entry of the last row using row n-1.
void fold_last_row(TridiagonalSystem& system, const FringeRow& row) {
    const std::size_t n = system.size() - 1;
    const double factor = row.on_n2 / system.sub[n - 1];
    system.sub[n] = row.on_n1 - factor * system.diag[n - 1];
    system.diag[n] = row.on_n - factor * system.super[n - 1];
    system.rhs[n] = row.rhs - factor * system.rhs[n - 1];
}

void check_spec(const cases::CaseSpec& spec, std::size_t n) {
    if (n < 4) {
        throw DomainError("fdm: need n >= 4");
    }
    if (spec.left_bc.is_robin()) {
        throw DomainError("fdm: the left condition must be Dirichlet");
    }
}

}  // namespace

GridFunction fdm_linear(const cases::CaseSpec& spec, std::size_t n) {
    check_spec(spec, n);
    if (spec.depends_on_u) {
        throw DomainError("fdm_linear: right-hand side depends on u; use fdm_newton");
    }
    const double h = 1.0 / static_cast<double>(n);
    const double inv_h2 = 1.0 / (h * h);

    TridiagonalSystem system(n + 1);
    system.diag[0] = 1.0;
    system.rhs[0] = spec.left_bc.value;
    for (std::size_t j = 1; j < n; ++j) {
        system.sub[j] = inv_h2;
        system.diag[j] = -2.0 * inv_h2;
        system.super[j] = inv_h2;
        system.rhs[j] = spec.rhs(static_cast<double>(j) * h, 0.0);
    }

    const auto& right = spec.right_bc;
    if (right.is_robin()) {
        fold_last_row(system, {1.0 / (2.0 * h), -4.0 / (2.0 * h),
                               3.0 / (2.0 * h) + right.robin_weight, right.value});
    } else {
        system.diag[n] = 1.0;
        system.rhs[n] = right.value;
    }
    return GridFunction(h, solve(system));
}

NewtonResult fdm_newton(const cases::CaseSpec& spec, std::size_t n, double tol, int max_iter) {
    check_spec(spec, n);
    if (!spec.drhs_du) {
        throw DomainError("fdm_newton: case does not provide d rhs / du");
    }
    const double h = 1.0 / static_cast<double>(n);
    const double inv_h2 = 1.0 / (h * h);
    const auto& right = spec.right_bc;
    const double a = spec.left_bc.value;

    std::vector<double> u(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        const double x = static_cast<double>(j) * h;
        u[j] = right.is_robin() ? a : a + (right.value - a) * x;
    }

    std::vector<double> norms;
    double last = HUGE_VAL;
    for (int it = 0; it < max_iter; ++it) {
        TridiagonalSystem jac(n + 1);
        jac.diag[0] = 1.0;
        jac.rhs[0] = -(u[0] - a);
        for (std::size_t j = 1; j < n; ++j) {
            const double x = static_cast<double>(j) * h;
            jac.sub[j] = inv_h2;
            jac.diag[j] = -2.0 * inv_h2 - spec.drhs_du(x, u[j]);
            jac.super[j] = inv_h2;
            const double residual = (u[j - 1] - 2.0 * u[j] + u[j + 1]) * inv_h2 - spec.rhs(x, u[j]);
            jac.rhs[j] = -residual;
        }
        if (right.is_robin()) {
            const double residual = (3.0 * u[n] - 4.0 * u[n - 1] + u[n - 2]) / (2.0 * h) +
                                    right.robin_weight * u[n] - right.value;
            fold_last_row(jac, {1.0 / (2.0 * h), -4.0 / (2.0 * h),
                                3.0 / (2.0 * h) + right.robin_weight, -residual});
        } else {
            jac.diag[n] = 1.0;
            jac.rhs[n] = -(u[n] - right.value);
        }

        const auto delta = solve(jac);
        last = 0.0;
        for (std::size_t j = 0; j <= n; ++j) {
            u[j] += delta[j];
            last = std::max(last, std::abs(delta[j]));
        }
        if (!std::isfinite(last)) {
            break;
        }
        norms.push_back(last);
        if (last < tol) {
            return {GridFunction(h, std::move(u)), std::move(norms)};
        }
    }
    throw NonConvergenceError("fdm_newton: no convergence after " + std::to_string(max_iter) +
                                  " iterations",
                              last, static_cast<int>(norms.size()));
}

}  // namespace ifoi::fdm
