#include "ifoi/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "ifoi/error.hpp"

namespace ifoi {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

double lanczos(double x) {
    const double z = x - 1.0;
    double series = kLanczosCoefficients[0];
    for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
        series += kLanczosCoefficients[i] / (z + static_cast<double>(i));
    }
    const double t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, z + 0.5) * std::exp(-t) * series;
}

}  // namespace

double gamma_fn(double x) {
    if (!std::isfinite(x) || x <= 0.0) {
        throw DomainError("gamma_fn: argument must be positive and finite");
    }
    if (x < 0.5) {
        return lanczos(x + 1.0) / x;
    }
    return lanczos(x);
}

double binomial(double a, std::size_t k) {
    double result = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
        result *= (a - static_cast<double>(i)) / static_cast<double>(i + 1);
    }
    return result;
}

}  // namespace ifoi
