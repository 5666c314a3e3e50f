#include <cmath>

#include <gtest/gtest.h>

#include "ifoi/error.hpp"
#include "ifoi/fdm.hpp"
#include "support/oracles.hpp"

namespace {

using ifoi::GridFunction;
namespace cases = ifoi::cases;
using cases::CaseId;

constexpr CaseId kAll[] = {CaseId::case1, CaseId::case2, CaseId::case3, CaseId::case4};

TEST(Cases, RightHandSides) {
    EXPECT_DOUBLE_EQ(cases::get_case(CaseId::case1).rhs(0.7, 123.0), -20.0);
    EXPECT_DOUBLE_EQ(cases::get_case(CaseId::case2).rhs(0.7, -1.0), -20.0);
    EXPECT_EQ(cases::get_case(CaseId::case3).rhs(0.0, 1.0), 0.0);
    EXPECT_NEAR(cases::get_case(CaseId::case3).rhs(0.3, 0.0), oracle::case3_forcing(0.3), 1e-15);
    EXPECT_EQ(cases::get_case(CaseId::case4).rhs(0.4, 5.0), 0.0);
    EXPECT_DOUBLE_EQ(cases::get_case(CaseId::case4).rhs(0.5, 3.0), 2.0);
}

TEST(Cases, Defaults) {
    const auto c1 = cases::get_case(CaseId::case1);
    EXPECT_EQ(c1.default_scheme, ifoi::fracops::Scheme::gl);
    EXPECT_EQ(c1.default_partition.stage_count(), 10u);
    EXPECT_FALSE(c1.right_bc.is_robin());
    const auto c3 = cases::get_case(CaseId::case3);
    EXPECT_EQ(c3.default_scheme, ifoi::fracops::Scheme::abm);
    EXPECT_TRUE(c3.right_bc.is_robin());
    EXPECT_DOUBLE_EQ(c3.right_bc.robin_weight, 200.0);
    EXPECT_DOUBLE_EQ(c3.right_bc.value, 0.1);
    EXPECT_DOUBLE_EQ(c3.left_bc.value, 5.0);
    EXPECT_TRUE(cases::get_case(CaseId::case4).depends_on_u);
}

TEST(Cases, ParseAndPrint) {
    for (CaseId id : kAll) {
        EXPECT_EQ(cases::parse_case_id(cases::to_string(id)), id);
    }
    EXPECT_EQ(cases::parse_case_id("3"), CaseId::case3);
    EXPECT_THROW(cases::parse_case_id("5"), ifoi::DomainError);
    EXPECT_THROW(cases::parse_case_id("case"), ifoi::DomainError);
    EXPECT_THROW(cases::get_case(static_cast<CaseId>(7)), ifoi::DomainError);
}

TEST(Cases, Case3ResonantWeightIsRejected) {
    EXPECT_THROW(cases::get_case(CaseId::case3, {5.0, -1.0, 0.1}), ifoi::DomainError);
}

TEST(Oracles, BoundaryConditionsHold) {
    for (CaseId id : kAll) {
        const auto spec = cases::get_case(id);
        EXPECT_NEAR(cases::oracle_solution(spec, 0.0), spec.left_bc.value, 1e-12) << to_string(id);
        const double u1 = cases::oracle_solution(spec, 1.0);
        double residual = u1 - spec.right_bc.value;
        if (spec.right_bc.is_robin()) {
            residual = spec.oracle_slope(1.0) + spec.right_bc.robin_weight * u1 - spec.right_bc.value;
        }
        EXPECT_LE(std::abs(residual), 1e-10) << to_string(id);
    }
}

TEST(Oracles, Case3WithCustomConstants) {
    const cases::Case3Constants k{1.0, 2.0, -0.5};
    const auto spec = cases::get_case(CaseId::case3, k);
    EXPECT_NEAR(spec.oracle(0.0), 1.0, 1e-15);
    EXPECT_NEAR(spec.oracle_slope(1.0) + 2.0 * spec.oracle(1.0), -0.5, 1e-12);
}

TEST(Oracles, ClosedFormsMatchQuadrature) {
    for (double x : {0.25, 0.7, 1.0}) {
        EXPECT_NEAR(cases::gaussian_forcing_double_integral(x),
                    oracle::double_integral(oracle::case1_forcing, x, 1e-7), 1e-9) << x;
        EXPECT_NEAR(cases::gaussian_forcing_integral(x),
                    oracle::simpson(oracle::case1_forcing, 0.0, x, 10'000'000), 1e-9) << x;
    }
    // Case 3 oracle minus its affine part is the double integral of the forcing.
    const auto spec = cases::get_case(CaseId::case3);
    const double a = spec.oracle(0.0);
    const double s = spec.oracle_slope(0.0);
    for (double x : {0.33, 1.0}) {
        EXPECT_NEAR(spec.oracle(x) - a - s * x,
                    oracle::double_integral(oracle::case3_forcing, x, 1e-7), 1e-9) << x;
    }
}

TEST(Oracles, Case4MatchesPowerSeries) {
    const auto spec = cases::get_case(CaseId::case4);
    for (int i = 0; i <= 100; ++i) {
        const double x = 0.01 * i + 0.00037 * (i < 100 ? 1 : 0);
        EXPECT_NEAR(spec.oracle(x), oracle::case4_series(x), 1e-11) << x;
    }
}

TEST(Oracles, Case4StepHalvingConfirmation) {
    EXPECT_LE(cases::case4_oracle_confirmation(), 1e-10);
}

double max_ode_residual(const cases::CaseSpec& spec, double d) {
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const double x = oracle::uniform(0.01, 0.99);
        const double u = spec.oracle(x);
        const double second = (spec.oracle(x + d) - 2.0 * u + spec.oracle(x - d)) / (d * d);
        worst = std::max(worst, std::abs(second - spec.rhs(x, u)));
    }
    return worst;
}

TEST(Oracles, SatisfyTheDifferentialEquation) {
    for (CaseId id : kAll) {
        const auto spec = cases::get_case(id);
        const double coarse = max_ode_residual(spec, 2e-3);
        const double fine = max_ode_residual(spec, 1e-3);
        EXPECT_LT(fine, 2e-2) << to_string(id);
        EXPECT_LT(fine, coarse / 3.0) << to_string(id);
    }
}

TEST(Oracles, DomainIsTheUnitInterval) {
    const auto spec = cases::get_case(CaseId::case1);
    EXPECT_THROW(cases::oracle_solution(spec, -0.1), ifoi::DomainError);
    EXPECT_THROW(cases::oracle_solution(spec, 1.1), ifoi::DomainError);
    EXPECT_NO_THROW(cases::oracle_solution(spec, 1.0));
}

TEST(SupError, Examples) {
    const auto spec = cases::get_case(CaseId::case1);
    const auto exact = GridFunction::sample(100, spec.oracle);
    EXPECT_EQ(cases::sup_error(exact, spec), 0.0);
    const auto shifted = GridFunction::sample(100, [&](double x) { return spec.oracle(x) + 1e-3; });
    EXPECT_NEAR(cases::sup_error(shifted, spec), 1e-3, 1e-15);
    const double fdm = cases::sup_error(ifoi::fdm::fdm_linear(spec, 100), spec);
    EXPECT_GT(fdm, 1.2e-4 / 3.0);
    EXPECT_LT(fdm, 1.2e-4 * 3.0);
    EXPECT_THROW(cases::sup_error(GridFunction::sample(10, spec.oracle, 0.5), spec), ifoi::DomainError);
}

TEST(SupError, IsAMetricOnGridFunctions) {
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> a(33);
        std::vector<double> b(33);
        std::vector<double> c(33);
        for (std::size_t j = 0; j < 33; ++j) {
            a[j] = oracle::uniform(-5.0, 5.0);
            b[j] = oracle::uniform(-5.0, 5.0);
            c[j] = oracle::uniform(-5.0, 5.0);
        }
        const GridFunction A(1.0 / 32, a);
        const GridFunction B(1.0 / 32, b);
        const GridFunction C(1.0 / 32, c);
        EXPECT_GT(ifoi::sup_distance(A, B), 0.0);
        EXPECT_EQ(ifoi::sup_distance(A, A), 0.0);
        EXPECT_EQ(ifoi::sup_distance(A, B), ifoi::sup_distance(B, A));
        EXPECT_LE(ifoi::sup_distance(A, C), ifoi::sup_distance(A, B) + ifoi::sup_distance(B, C) + 1e-15);
    }
}

TEST(Reports, StatusNames) {
    EXPECT_EQ(cases::to_string(cases::Status::converged), "converged");
    EXPECT_EQ(cases::to_string(cases::Status::diverged), "diverged");
    EXPECT_EQ(cases::to_string(cases::Status::singular), "singular");
    EXPECT_EQ(cases::to_string(cases::Method::fdm), "fdm");
    EXPECT_EQ(cases::to_string(cases::Method::ifoi), "ifoi");
}

}  // namespace
