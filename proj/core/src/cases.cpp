#include "ifoi/cases.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ifoi/error.hpp"
#include "ifoi/reference_ivp.hpp"

namespace ifoi::cases {

namespace {

constexpr double kGaussCenter = 0.7;
constexpr double kGaussRate = 10.0;
constexpr double kGaussAmplitude = -20.0;
constexpr double kCase3Frequency = 200.0;

double gaussian_forcing(double x) {
    const double d = x - kGaussCenter;
    return kGaussAmplitude * std::exp(-kGaussRate * d * d);
}

/// Antiderivative of exp(-10 (s - 0.7)^2).
double gaussian_antiderivative(double s) {
    const double r = std::sqrt(kGaussRate);
    return std::sqrt(std::numbers::pi) / (2.0 * r) * std::erf(r * (s - kGaussCenter));
}

double gaussian(double s) {
    const double d = s - kGaussCenter;
    return std::exp(-kGaussRate * d * d);
}

/// Particular solution of u'' = -x cos^2(100 x) = -x (1 + cos(200 x)) / 2 with p(0) = 0.
double case3_particular(double x) {
    const double k = kCase3Frequency;
    return -x * x * x / 12.0 + x * std::cos(k * x) / (2.0 * k * k) - std::sin(k * x) / (k * k * k);
}

double case3_particular_slope(double x) {
    const double k = kCase3Frequency;
    return -x * x / 4.0 + std::cos(k * x) / (2.0 * k * k) - x * std::sin(k * x) / (2.0 * k) -
           std::cos(k * x) / (k * k);
}

double zero_rhs(double, double) { return 0.0; }

/// Case 4 oracle: RK4 shooting on a 1e-6 step, sampled every 1e-4 and
/// interpolated by cubic Hermite polynomials.
class Case4Oracle {
public:
    static const Case4Oracle& instance() {
        static const Case4Oracle oracle;
        return oracle;
    }

    double operator()(double x) const { return table_.value_at(x); }
    double slope(double x) const { return table_.slope_at(x); }
    double confirmation() const { return confirmation_; }

private:
    static constexpr std::size_t kSteps = 1'000'000;
    static constexpr std::size_t kStride = 100;

    static Trajectory shoot(std::size_t steps, std::size_t stride) {
        const IvpProblem particular{[](double x, double u) { return 2.0 * x * (5.0 - u); }, 3.0,
                                    0.0, true};
        const IvpProblem homogeneous{[](double x, double u) { return -2.0 * x * u; }, 0.0, 1.0,
                                     true};
        Trajectory u1 = rk4_trajectory(particular, steps, stride);
        const Trajectory u2 = rk4_trajectory(homogeneous, steps, stride);
        const double c = (-2.0 - u1.u.back()) / u2.u.back();
        for (std::size_t i = 0; i < u1.u.size(); ++i) {
            u1.u[i] += c * u2.u[i];
            u1.du[i] += c * u2.du[i];
        }
        return u1;
    }

    Case4Oracle() : table_(shoot(kSteps, kStride)) {
        const Trajectory fine = shoot(2 * kSteps, 2 * kStride);
        for (std::size_t i = 0; i < table_.u.size(); ++i) {
            confirmation_ = std::max(confirmation_, std::abs(table_.u[i] - fine.u[i]));
        }
        if (!(confirmation_ <= 1e-10)) {
            throw std::logic_error("case 4 oracle: step-halving check failed");
        }
    }

    Trajectory table_;
    double confirmation_ = 0.0;
};

CaseSpec make_case1() {
    constexpr double a = -3.0;
    constexpr double b = -2.0;
    CaseSpec spec;
    spec.id = CaseId::case1;
    spec.rhs = [](double x, double) { return gaussian_forcing(x); };
    spec.homogeneous_rhs = zero_rhs;
    spec.drhs_du = zero_rhs;
    spec.left_bc = BoundaryCondition::dirichlet(Side::left, a);
    spec.right_bc = BoundaryCondition::dirichlet(Side::right, b);
    spec.default_scheme = fracops::Scheme::gl;
    spec.default_partition = AlphaPartition(Spacing::regular, 10);
    spec.default_n = 100;
    const double slope = b - a - gaussian_forcing_double_integral(1.0);
    spec.oracle = [=](double x) { return a + slope * x + gaussian_forcing_double_integral(x); };
    spec.oracle_slope = [=](double x) { return slope + gaussian_forcing_integral(x); };
    return spec;
}

CaseSpec make_case2() {
    constexpr double a = 5.0;
    constexpr double weight = 200.0;
    constexpr double value = 0.1;
    CaseSpec spec;
    spec.id = CaseId::case2;
    spec.rhs = [](double x, double) { return gaussian_forcing(x); };
    spec.homogeneous_rhs = zero_rhs;
    spec.drhs_du = zero_rhs;
    spec.left_bc = BoundaryCondition::dirichlet(Side::left, a);
    spec.right_bc = BoundaryCondition::robin(Side::right, weight, value);
    spec.default_scheme = fracops::Scheme::rect;
    spec.default_partition = AlphaPartition(Spacing::regular, 10);
    spec.default_n = 100;
    const double slope = (value - gaussian_forcing_integral(1.0) -
                          weight * (a + gaussian_forcing_double_integral(1.0))) /
                         (1.0 + weight);
    spec.oracle = [=](double x) { return a + slope * x + gaussian_forcing_double_integral(x); };
    spec.oracle_slope = [=](double x) { return slope + gaussian_forcing_integral(x); };
    return spec;
}

CaseSpec make_case3(const Case3Constants& k) {
    CaseSpec spec;
    spec.id = CaseId::case3;
    spec.rhs = [](double x, double) {
        const double s = std::sin(100.0 * x);
        return -x * (1.0 - s * s);
    };
    spec.homogeneous_rhs = zero_rhs;
    spec.drhs_du = zero_rhs;
    spec.left_bc = BoundaryCondition::dirichlet(Side::left, k.a);
    spec.right_bc = BoundaryCondition::robin(Side::right, k.b, k.c);
    spec.default_scheme = fracops::Scheme::abm;
    spec.default_partition = AlphaPartition(Spacing::quadratic, 10);
    spec.default_n = 40;
    if (std::abs(1.0 + k.b) < 1e-12) {
        throw DomainError("case 3: Robin weight -1 makes the problem resonant");
    }
    const double slope =
        (k.c - case3_particular_slope(1.0) - k.b * (k.a + case3_particular(1.0))) / (1.0 + k.b);
    spec.oracle = [a = k.a, slope](double x) { return a + slope * x + case3_particular(x); };
    spec.oracle_slope = [slope](double x) { return slope + case3_particular_slope(x); };
    return spec;
}

CaseSpec make_case4() {
    CaseSpec spec;
    spec.id = CaseId::case4;
    spec.rhs = [](double x, double u) { return 2.0 * x * (5.0 - u); };
    spec.homogeneous_rhs = [](double x, double u) { return -2.0 * x * u; };
    spec.drhs_du = [](double x, double) { return -2.0 * x; };
    spec.left_bc = BoundaryCondition::dirichlet(Side::left, 3.0);
    spec.right_bc = BoundaryCondition::dirichlet(Side::right, -2.0);
    spec.depends_on_u = true;
    spec.default_scheme = fracops::Scheme::abm;
    spec.default_partition = AlphaPartition(Spacing::regular, 10);
    spec.default_n = 50;
    spec.oracle = [](double x) { return Case4Oracle::instance()(x); };
    spec.oracle_slope = [](double x) { return Case4Oracle::instance().slope(x); };
    return spec;
}

}  // namespace

double gaussian_forcing_double_integral(double x) {
    const double e0 = gaussian_antiderivative(0.0);
    return kGaussAmplitude * (x - kGaussCenter) * (gaussian_antiderivative(x) - e0)
           + kGaussAmplitude / (2.0 * kGaussRate) * (gaussian(x) - gaussian(0.0));
}

double gaussian_forcing_integral(double x) {
    return kGaussAmplitude * (gaussian_antiderivative(x) - gaussian_antiderivative(0.0));
}

double case4_oracle_confirmation() { return Case4Oracle::instance().confirmation(); }

std::string to_string(CaseId id) { return "case" + std::to_string(static_cast<int>(id)); }

CaseId parse_case_id(std::string_view text) {
    if (text.starts_with("case")) {
        text.remove_prefix(4);
    }
    if (text.size() == 1 && text[0] >= '1' && text[0] <= '4') {
        return static_cast<CaseId>(text[0] - '0');
    }
    throw DomainError("unknown case id '" + std::string(text) + "'");
}

CaseSpec get_case(CaseId id, const Case3Constants& case3) {
    switch (id) {
        case CaseId::case1: return make_case1();
        case CaseId::case2: return make_case2();
        case CaseId::case3: return make_case3(case3);
        case CaseId::case4: return make_case4();
    }
    throw DomainError("unknown case id " + std::to_string(static_cast<int>(id)));
}

double oracle_solution(const CaseSpec& spec, double x) {
    if (!(x >= -1e-12 && x <= 1.0 + 1e-12)) {
        throw DomainError("oracle_solution: x outside [0, 1]");
    }
    return spec.oracle(std::clamp(x, 0.0, 1.0));
}

double sup_error(const GridFunction& approx, const CaseSpec& spec) {
    if (!approx.covers(1.0)) {
        throw DomainError("sup_error: grid does not span [0, 1]");
    }
    double worst = 0.0;
    for (std::size_t j = 0; j < approx.size(); ++j) {
        worst = std::max(worst, std::abs(approx[j] - spec.oracle(approx.x(j))));
    }
    return worst;
}

std::string_view to_string(Method method) { return method == Method::fdm ? "fdm" : "ifoi"; }

std::string_view to_string(Status status) {
    switch (status) {
        case Status::converged: return "converged";
        case Status::diverged: return "diverged";
        case Status::singular: return "singular";
    }
    return "?";
}

}  // namespace ifoi::cases
