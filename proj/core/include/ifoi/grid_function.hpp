#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace ifoi {

/// Samples of a real function on the uniform grid x_j = j*h, j = 0..n.
///
/// Values are always finite and there are at least two nodes. The left
/// end of the grid is the lower terminal x = 0 of every operator here.
class GridFunction {
public:
    GridFunction(double h, std::vector<double> values);

    /// Samples `f` on n intervals of [0, length].
    static GridFunction sample(std::size_t n, const std::function<double(double)>& f,
                               double length = 1.0);

    /// All-zero grid function with n intervals on [0, length].
    static GridFunction zeros(std::size_t n, double length = 1.0);

    double h() const noexcept { return h_; }
    /// Number of intervals (one less than the number of nodes).
    std::size_t intervals() const noexcept { return values_.size() - 1; }
    std::size_t size() const noexcept { return values_.size(); }
    double x(std::size_t j) const noexcept { return static_cast<double>(j) * h_; }
    /// Right end of the grid, n*h.
    double length() const noexcept { return x(intervals()); }

    double operator[](std::size_t j) const noexcept { return values_[j]; }
    double front() const noexcept { return values_.front(); }
    double back() const noexcept { return values_.back(); }

    std::span<const double> values() const noexcept { return values_; }

    /// True when `other` has the same step and node count.
    bool same_grid(const GridFunction& other) const noexcept;

    /// Whether the grid covers [0, endpoint] to one part in 10^9.
    bool covers(double endpoint) const noexcept;

private:
    double h_;
    std::vector<double> values_;
};

/// max_j |a_j - b_j|; the grids must match.
double sup_distance(const GridFunction& a, const GridFunction& b);

}  // namespace ifoi
