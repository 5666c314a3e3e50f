#include "ifoi/fracops.hpp"

#include <cmath>
#include <string>

#include "ifoi/error.hpp"
#include "ifoi/special_functions.hpp"

namespace ifoi::fracops {

FracOrder::FracOrder(double alpha) : alpha_(alpha) {
    if (!std::isfinite(alpha) || std::abs(alpha) > 4.0) {
        throw DomainError("FracOrder: |alpha| must not exceed 4");
    }
}

void FracOrder::require_integration() const {
    if (!(alpha_ >= -2.0 && alpha_ < 0.0)) {
        throw DomainError("fractional integration needs -2 <= alpha < 0, got " +
                          std::to_string(alpha_));
    }
}

std::string_view to_string(Scheme scheme) {
    switch (scheme) {
        case Scheme::gl: return "gl";
        case Scheme::rect: return "rect";
        case Scheme::abm: return "abm";
    }
    return "?";
}

Scheme parse_scheme(std::string_view text) {
    if (text == "gl") return Scheme::gl;
    if (text == "rect") return Scheme::rect;
    if (text == "abm") return Scheme::abm;
    throw DomainError("unknown scheme '" + std::string(text) + "'");
}

std::vector<double> gl_coefficients(FracOrder alpha, std::size_t count) {
    if (count == 0) {
        throw DomainError("gl_coefficients: count must be positive");
    }
    std::vector<double> w(count);
    w[0] = 1.0;
    const double a1 = alpha.value() + 1.0;
    for (std::size_t j = 1; j < count; ++j) {
        w[j] = w[j - 1] * (1.0 - a1 / static_cast<double>(j));
    }
    return w;
}

GridFunction gl_apply(const GridFunction& f, FracOrder alpha, const MemoryPolicy& policy) {
    alpha.require_integration();
    const std::size_t n = f.intervals();
    const double h = f.h();

    std::size_t memory = n;
    if (policy.is_truncated()) {
        if (!(policy.window_length >= 10.0 * h)) {
            throw DomainError("gl_apply: memory window must be at least 10 h");
        }
        memory = std::min(n, static_cast<std::size_t>(std::floor(policy.window_length / h + 1e-9)));
    }

    const auto w = gl_coefficients(alpha, memory + 1);
    const double scale = std::pow(h, alpha.mu());
    const auto values = f.values();

    std::vector<double> out(n + 1, 0.0);
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t last = std::min(k, memory);
        double sum = 0.0;
        for (std::size_t j = 0; j <= last; ++j) {
            sum += w[j] * values[k - j];
        }
        out[k] = scale * sum;
    }
    return GridFunction(h, std::move(out));
}

namespace {

/// b_k = (k+1)^mu - k^mu, k = 0..count-1.
std::vector<double> rectangle_weights(double mu, std::size_t count) {
    std::vector<double> b(count);
    double prev = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        const double next = std::pow(static_cast<double>(k + 1), mu);
        b[k] = next - prev;
        prev = next;
    }
    return b;
}

/// c_k = (k+1)^{mu+1} + (k-1)^{mu+1} - 2 k^{mu+1} for k >= 1; c_0 unused.
std::vector<double> trapezoid_weights(double mu, std::size_t count) {
    std::vector<double> c(count, 0.0);
    for (std::size_t k = 1; k < count; ++k) {
        const double kd = static_cast<double>(k);
        c[k] = std::pow(kd + 1.0, mu + 1.0) + std::pow(kd - 1.0, mu + 1.0) -
               2.0 * std::pow(kd, mu + 1.0);
    }
    return c;
}

/// Unscaled a_{n,0}.
double trapezoid_first_weight(double mu, std::size_t n) {
    const double nd = static_cast<double>(n);
    return std::pow(nd - 1.0, mu + 1.0) - std::pow(nd, mu) * (nd - mu - 1.0);
}

}  // namespace

GridFunction rect_apply(const GridFunction& f, FracOrder alpha) {
    alpha.require_integration();
    const std::size_t n = f.intervals();
    const double mu = alpha.mu();
    const double scale = std::pow(f.h(), mu) / gamma_fn(mu + 1.0);
    const auto b = rectangle_weights(mu, n);
    const auto values = f.values();

    std::vector<double> out(n + 1, 0.0);
    for (std::size_t k = 1; k <= n; ++k) {
        double sum = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            sum += b[k - j - 1] * values[j];
        }
        out[k] = scale * sum;
    }
    return GridFunction(f.h(), std::move(out));
}

GridFunction abm_solve(const std::function<double(double, double)>& g, double y0,
                       FracOrder alpha, double h, std::size_t n, const AbmOptions& options) {
    alpha.require_integration();
    if (n < 1) {
        throw DomainError("abm_solve: need n >= 1");
    }
    if (options.corrector_passes < 1) {
        throw DomainError("abm_solve: corrector_passes must be >= 1");
    }
    const double mu = alpha.mu();
    const double pred_scale = std::pow(h, mu) / gamma_fn(mu + 1.0);
    const double corr_scale = std::pow(h, mu) / gamma_fn(mu + 2.0);
    const auto b = rectangle_weights(mu, n);
    const auto c = trapezoid_weights(mu, n);

    std::vector<double> y(n + 1, y0);
    std::vector<double> gv(n + 1, 0.0);
    gv[0] = g(0.0, y0);

    for (std::size_t k = 1; k <= n; ++k) {
        double predictor = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            predictor += b[k - j - 1] * gv[j];
        }
        double history = trapezoid_first_weight(mu, k) * gv[0];
        for (std::size_t j = 1; j < k; ++j) {
            history += c[k - j] * gv[j];
        }

        const double xk = static_cast<double>(k) * h;
        double yk = y0 + pred_scale * predictor;
        for (int pass = 0; pass < options.corrector_passes; ++pass) {
            yk = y0 + corr_scale * (history + g(xk, yk));
        }
        y[k] = yk;
        gv[k] = g(xk, yk);
    }
    // The node-zero value is the integral over an empty interval.
    y[0] = y0;
    return GridFunction(h, std::move(y));
}

GridFunction abm_apply(const GridFunction& f, FracOrder alpha, const AbmOptions& options) {
    alpha.require_integration();
    if (options.corrector_passes < 1) {
        throw DomainError("abm_apply: corrector_passes must be >= 1");
    }
    const std::size_t n = f.intervals();
    const double mu = alpha.mu();
    const double scale = std::pow(f.h(), mu) / gamma_fn(mu + 2.0);
    const auto c = trapezoid_weights(mu, n);
    const auto values = f.values();

    std::vector<double> out(n + 1, 0.0);
    for (std::size_t k = 1; k <= n; ++k) {
        double sum = trapezoid_first_weight(mu, k) * values[0] + values[k];
        for (std::size_t j = 1; j < k; ++j) {
            sum += c[k - j] * values[j];
        }
        out[k] = scale * sum;
    }
    return GridFunction(f.h(), std::move(out));
}

GridFunction integrate(Scheme scheme, const GridFunction& f, FracOrder alpha,
                       const MemoryPolicy& policy, const AbmOptions& abm) {
    if (policy.is_truncated() && scheme != Scheme::gl) {
        throw DomainError("memory truncation is only available for the GL scheme");
    }
    switch (scheme) {
        case Scheme::gl: return gl_apply(f, alpha, policy);
        case Scheme::rect: return rect_apply(f, alpha);
        case Scheme::abm: return abm_apply(f, alpha, abm);
    }
    throw DomainError("unknown scheme");
}

}  // namespace ifoi::fracops
