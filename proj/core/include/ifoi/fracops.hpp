#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "ifoi/grid_function.hpp"

/// Riemann-Liouville fractional integration of uniformly sampled functions,
/// lower terminal fixed at x = 0.
///
/// Three discretizations are provided:
///  - Grünwald-Letnikov series (first order),
///  - product rectangle rule, left end points (first order),
///  - Adams-Bashforth-Moulton PECE with product trapezoidal corrector
///    (second order for smooth integrands).
///
/// Every scheme returns 0 at x_0, the integral from 0 to 0.
namespace ifoi::fracops {

/// Differintegral order. Negative values integrate, positive differentiate.
class FracOrder {
public:
    /// Throws DomainError unless |alpha| <= 4 and alpha is finite.
    explicit FracOrder(double alpha);

    double value() const noexcept { return alpha_; }
    /// Integration order mu = -alpha.
    double mu() const noexcept { return -alpha_; }
    bool is_integration() const noexcept { return alpha_ < 0.0; }

    /// Throws DomainError unless -2 <= alpha < 0.
    void require_integration() const;

private:
    double alpha_;
};

/// Short-memory principle: optionally keep only the last `window_length`
/// of the convolution tail.
struct MemoryPolicy {
    enum class Mode { full, truncated };

    Mode mode = Mode::full;
    double window_length = 0.0;

    static MemoryPolicy full() { return {}; }
    static MemoryPolicy truncated(double window) { return {Mode::truncated, window}; }

    bool is_truncated() const noexcept { return mode == Mode::truncated; }
};

enum class Scheme { gl, rect, abm };

std::string_view to_string(Scheme scheme);
/// Accepts "gl", "rect", "abm". Throws DomainError otherwise.
Scheme parse_scheme(std::string_view text);

/// w_j = (-1)^j binom(alpha, j), j < count, by the recursion
/// w_0 = 1, w_j = w_{j-1} (1 - (alpha + 1) / j).
std::vector<double> gl_coefficients(FracOrder alpha, std::size_t count);

/// Grünwald-Letnikov approximation
///   out_k = h^{-alpha} sum_{j=0..k} w_j f(x_k - j h)
/// with the sum clipped to j <= window/h when the policy truncates.
GridFunction gl_apply(const GridFunction& f, FracOrder alpha,
                      const MemoryPolicy& policy = MemoryPolicy::full());

/// Product rectangle rule of order mu = -alpha, left end points:
///   out_n = h^mu / Gamma(mu+1) sum_{j=0..n-1} ((n-j)^mu - (n-j-1)^mu) f_j
GridFunction rect_apply(const GridFunction& f, FracOrder alpha);

struct AbmOptions {
    /// 1 is the classical PECE scheme. 2 adds a second corrector sweep per
    /// node (the cost-trading variant); higher values iterate further.
    int corrector_passes = 1;
};

/// Solves the Volterra form y(x) = y0 + I^mu g(., y)(x) on n intervals of
/// [0, n h] with the fractional Adams-Bashforth-Moulton predictor-corrector.
///
/// The predictor uses the product rectangle weights, the corrector the
/// product trapezoidal weights
///   a_{n,0} = ((n-1)^{mu+1} - n^mu (n - mu - 1)) h^mu / Gamma(mu+2)
///   a_{n,j} = ((n-j+1)^{mu+1} + (n-j-1)^{mu+1} - 2 (n-j)^{mu+1}) h^mu / Gamma(mu+2)
///   a_{n,n} = h^mu / Gamma(mu+2)
GridFunction abm_solve(const std::function<double(double x, double y)>& g, double y0,
                       FracOrder alpha, double h, std::size_t n,
                       const AbmOptions& options = {});

/// Fractional integral of known samples by the ABM scheme. The integrand
/// does not depend on the unknown, so the corrector is the product
/// trapezoidal rule and the predictor never reaches the result.
GridFunction abm_apply(const GridFunction& f, FracOrder alpha, const AbmOptions& options = {});

/// Dispatches to gl_apply, rect_apply or abm_apply. A truncated memory
/// policy is only meaningful for the GL scheme; other schemes reject it.
GridFunction integrate(Scheme scheme, const GridFunction& f, FracOrder alpha,
                       const MemoryPolicy& policy = MemoryPolicy::full(),
                       const AbmOptions& abm = {});

}  // namespace ifoi::fracops
