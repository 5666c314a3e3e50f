#pragma once

#include <cstddef>

namespace ifoi {

/// Gamma function for x > 0 (Lanczos, g = 7, nine coefficients).
///
/// Relative error is below 1e-13 on [0.5, 30]. Arguments below 0.5 are
/// handled through Gamma(x) = Gamma(x + 1) / x.
/// Throws DomainError for x <= 0 or non-finite x.
double gamma_fn(double x);

/// Generalized binomial coefficient binom(a, k) for real a, by the product
/// a (a-1) ... (a-k+1) / k!.
double binomial(double a, std::size_t k);

}  // namespace ifoi
