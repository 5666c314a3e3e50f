#include "ifoi/grid_function.hpp"

#include <algorithm>
#include <cmath>

#include "ifoi/error.hpp"

namespace ifoi {

GridFunction::GridFunction(double h, std::vector<double> values)
    : h_(h), values_(std::move(values)) {
    if (!(h_ > 0.0) || !std::isfinite(h_)) {
        throw DomainError("GridFunction: step must be positive");
    }
    if (values_.size() < 2) {
        throw DomainError("GridFunction: need at least two nodes");
    }
    if (!std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); })) {
        throw DomainError("GridFunction: non-finite sample");
    }
}

GridFunction GridFunction::sample(std::size_t n, const std::function<double(double)>& f,
                                  double length) {
    if (n < 1) {
        throw DomainError("GridFunction::sample: need n >= 1");
    }
    const double h = length / static_cast<double>(n);
    std::vector<double> values(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        values[j] = f(static_cast<double>(j) * h);
    }
    return GridFunction(h, std::move(values));
}

GridFunction GridFunction::zeros(std::size_t n, double length) {
    if (n < 1) {
        throw DomainError("GridFunction::zeros: need n >= 1");
    }
    return GridFunction(length / static_cast<double>(n), std::vector<double>(n + 1, 0.0));
}

bool GridFunction::same_grid(const GridFunction& other) const noexcept {
    return size() == other.size() && std::abs(h_ - other.h_) <= 1e-15 * h_;
}

bool GridFunction::covers(double endpoint) const noexcept {
    return std::abs(length() - endpoint) <= 1e-9 * std::max(1.0, std::abs(endpoint));
}

double sup_distance(const GridFunction& a, const GridFunction& b) {
    if (!a.same_grid(b)) {
        throw DomainError("sup_distance: grids differ");
    }
    double worst = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        worst = std::max(worst, std::abs(a[j] - b[j]));
    }
    return worst;
}

}  // namespace ifoi
