#pragma once

#include <vector>

namespace ifoi::fdm {

/// Row i reads sub[i] x[i-1] + diag[i] x[i] + super[i] x[i+1] = rhs[i];
/// sub[0] and super[n] are ignored.
struct TridiagonalSystem {
    std::vector<double> sub;
    std::vector<double> diag;
    std::vector<double> super;
    std::vector<double> rhs;

    explicit TridiagonalSystem(std::size_t size)
        : sub(size, 0.0), diag(size, 0.0), super(size, 0.0), rhs(size, 0.0) {}

    std::size_t size() const noexcept { return diag.size(); }
};

/// Thomas sweep. Throws SingularError on a pivot below 1e-14 in magnitude.
std::vector<double> solve(const TridiagonalSystem& system);

}  // namespace ifoi::fdm
