#include "ifoi/reference_ivp.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ifoi/error.hpp"

namespace ifoi {

namespace {

/// Interval index and local coordinate of x.
std::pair<std::size_t, double> locate(const Trajectory& traj, double x) {
    if (traj.u.size() < 2) {
        throw DomainError("Trajectory: empty");
    }
    const std::size_t last = traj.u.size() - 1;
    const double pos = x / traj.h;
    std::size_t i = pos <= 0.0 ? 0 : static_cast<std::size_t>(std::floor(pos));
    i = std::min(i, last - 1);
    return {i, pos - static_cast<double>(i)};
}

}  // namespace

double Trajectory::slope_at(double x) const {
    const auto [i, t] = locate(*this, x);
    const double t2 = t * t;
    const double d00 = (6.0 * t2 - 6.0 * t) / h;
    const double d10 = 3.0 * t2 - 4.0 * t + 1.0;
    const double d01 = (-6.0 * t2 + 6.0 * t) / h;
    const double d11 = 3.0 * t2 - 2.0 * t;
    return d00 * u[i] + d10 * du[i] + d01 * u[i + 1] + d11 * du[i + 1];
}

double Trajectory::value_at(double x) const {
    const auto [i, t] = locate(*this, x);
    const double t2 = t * t;
    const double t3 = t2 * t;
    const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    return h00 * u[i] + h10 * h * du[i] + h01 * u[i + 1] + h11 * h * du[i + 1];
}

Trajectory rk4_trajectory(const IvpProblem& problem, std::size_t steps, std::size_t record_every,
                          double length) {
    if (steps == 0 || record_every == 0 || steps % record_every != 0) {
        throw DomainError("rk4_trajectory: steps must be a positive multiple of record_every");
    }
    const double h = length / static_cast<double>(steps);
    const auto& f = problem.rhs;

    Trajectory out;
    out.h = h * static_cast<double>(record_every);
    out.u.reserve(steps / record_every + 1);
    out.du.reserve(steps / record_every + 1);

    double u = problem.u0;
    double v = problem.s0;
    out.u.push_back(u);
    out.du.push_back(v);
    for (std::size_t i = 0; i < steps; ++i) {
        const double x = static_cast<double>(i) * h;
        const double xm = x + 0.5 * h;
        const double xe = static_cast<double>(i + 1) * h;

        const double k1u = v;
        const double k1v = f(x, u);
        const double k2u = v + 0.5 * h * k1v;
        const double k2v = f(xm, u + 0.5 * h * k1u);
        const double k3u = v + 0.5 * h * k2v;
        const double k3v = f(xm, u + 0.5 * h * k2u);
        const double k4u = v + h * k3v;
        const double k4v = f(xe, u + h * k3u);

        u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        if ((i + 1) % record_every == 0) {
            out.u.push_back(u);
            out.du.push_back(v);
        }
    }
    return out;
}

GridFunction rk4_solve(const IvpProblem& problem, std::size_t n, std::size_t substeps) {
    if (n < 1 || substeps < 1) {
        throw DomainError("rk4_solve: need n >= 1 and substeps >= 1");
    }
    auto traj = rk4_trajectory(problem, n * substeps, substeps, 1.0);
    return GridFunction(1.0 / static_cast<double>(n), std::move(traj.u));
}

}  // namespace ifoi
