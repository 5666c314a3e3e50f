#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "ifoi/alpha_partition.hpp"
#include "ifoi/boundary.hpp"
#include "ifoi/fracops.hpp"
#include "ifoi/grid_function.hpp"

namespace ifoi::cases {

enum class CaseId { case1 = 1, case2 = 2, case3 = 3, case4 = 4 };

std::string to_string(CaseId id);
/// Accepts "1".."4" and "case1".."case4". Throws DomainError otherwise.
CaseId parse_case_id(std::string_view text);

/// Boundary constants of case 3: u(0) = a, u'(1) + b u(1) = c.
struct Case3Constants {
    double a = 5.0;
    double b = 200.0;
    double c = 0.1;
};

/// One two-point boundary value problem u'' = rhs(x, u) on [0, 1].
struct CaseSpec {
    CaseId id = CaseId::case1;
    std::function<double(double x, double u)> rhs;
    /// The right-hand side with the forcing removed (for the shooting
    /// homogeneous solution).
    std::function<double(double x, double u)> homogeneous_rhs;
    /// d rhs / du, needed by the Newton finite-difference solver.
    std::function<double(double x, double u)> drhs_du;
    BoundaryCondition left_bc;
    BoundaryCondition right_bc;
    bool depends_on_u = false;
    fracops::Scheme default_scheme = fracops::Scheme::abm;
    AlphaPartition default_partition{Spacing::regular, 10};
    /// Default grid resolution.
    std::size_t default_n = 100;
    /// High-accuracy reference solution on [0, 1] and its derivative.
    std::function<double(double x)> oracle;
    std::function<double(double x)> oracle_slope;
};

/// Throws DomainError for an id outside 1..4.
CaseSpec get_case(CaseId id, const Case3Constants& case3 = {});

/// Reference solution of `spec` at x. Throws DomainError outside [0, 1].
double oracle_solution(const CaseSpec& spec, double x);

/// Max node-wise deviation of `approx` from the oracle. The grid must span [0, 1].
double sup_error(const GridFunction& approx, const CaseSpec& spec);

/// Double integral of the case-1 forcing from 0, closed form in erf.
double gaussian_forcing_double_integral(double x);
/// Single integral of the case-1 forcing from 0.
double gaussian_forcing_integral(double x);

/// Largest deviation between the case-4 RK4 oracle at h = 1e-6 and the
/// Richardson confirmation run at h = 5e-7, over the oracle table.
double case4_oracle_confirmation();

enum class Method { fdm, ifoi };
enum class Status { converged, diverged, singular };

std::string_view to_string(Method method);
std::string_view to_string(Status status);

struct RunParams {
    std::size_t n = 0;
    std::size_t m = 0;
    Spacing spacing = Spacing::regular;
    fracops::Scheme scheme = fracops::Scheme::abm;
};

/// Outcome of one solve of one case by one method.
struct SolveReport {
    CaseId id = CaseId::case1;
    Method method = Method::fdm;
    RunParams params;
    Status status = Status::converged;
    std::optional<GridFunction> solution;
    /// Present only when status == converged.
    std::optional<double> sup_error;
    double wall_time = 0.0;
    std::string message;
};

}  // namespace ifoi::cases
