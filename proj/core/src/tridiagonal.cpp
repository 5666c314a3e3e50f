#include "ifoi/tridiagonal.hpp"

#include <cmath>

#include "ifoi/error.hpp"

namespace ifoi::fdm {

std::vector<double> solve(const TridiagonalSystem& system) {
    constexpr double kMinPivot = 1e-14;
    const std::size_t n = system.size();
    if (n == 0 || system.sub.size() != n || system.super.size() != n || system.rhs.size() != n) {
        throw DomainError("tridiagonal solve: inconsistent band lengths");
    }

    std::vector<double> c(n, 0.0);
    std::vector<double> d(n, 0.0);
    double pivot = system.diag[0];
    if (std::abs(pivot) < kMinPivot) {
        throw SingularError("tridiagonal solve: vanishing pivot in row 0");
    }
    c[0] = system.super[0] / pivot;
    d[0] = system.rhs[0] / pivot;
    for (std::size_t i = 1; i < n; ++i) {
        pivot = system.diag[i] - system.sub[i] * c[i - 1];
        if (std::abs(pivot) < kMinPivot) {
            throw SingularError("tridiagonal solve: vanishing pivot in row " + std::to_string(i));
        }
        c[i] = i + 1 < n ? system.super[i] / pivot : 0.0;
        d[i] = (system.rhs[i] - system.sub[i] * d[i - 1]) / pivot;
    }

    std::vector<double> x(n);
    x[n - 1] = d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        x[i] = d[i] - c[i] * x[i + 1];
    }
    return x;
}

}  // namespace ifoi::fdm
