#include <cmath>
#include <limits>
#include <numbers>

#include <gtest/gtest.h>

#include "ifoi/error.hpp"
#include "ifoi/special_functions.hpp"

namespace {

using ifoi::gamma_fn;

TEST(GammaFn, KnownValues) {
    EXPECT_NEAR(gamma_fn(0.5), std::sqrt(std::numbers::pi), 1e-14);
    EXPECT_NEAR(gamma_fn(5.0), 24.0, 1e-12);
    EXPECT_NEAR(gamma_fn(1.5), std::sqrt(std::numbers::pi) / 2.0, 1e-14);
    EXPECT_NEAR(gamma_fn(1.0), 1.0, 1e-14);
    EXPECT_NEAR(gamma_fn(2.0), 1.0, 1e-14);
}

TEST(GammaFn, MatchesStdTgammaOnWorkingRange) {
    double worst = 0.0;
    for (int i = 0; i <= 2950; ++i) {
        const double x = 0.5 + 0.01 * i;
        const double ref = std::tgamma(x);
        worst = std::max(worst, std::abs(gamma_fn(x) - ref) / ref);
    }
    EXPECT_LT(worst, 1e-13);
}

TEST(GammaFn, SmallArgumentsSatisfyRecurrence) {
    for (double x : {1e-6, 0.01, 0.1, 0.25, 0.49}) {
        EXPECT_NEAR(x * gamma_fn(x) / gamma_fn(x + 1.0), 1.0, 1e-13) << x;
    }
}

TEST(GammaFn, RejectsNonPositiveAndNonFinite) {
    EXPECT_THROW(gamma_fn(0.0), ifoi::DomainError);
    EXPECT_THROW(gamma_fn(-1.5), ifoi::DomainError);
    EXPECT_THROW(gamma_fn(std::numeric_limits<double>::quiet_NaN()), ifoi::DomainError);
    EXPECT_THROW(gamma_fn(std::numeric_limits<double>::infinity()), ifoi::DomainError);
}

TEST(Binomial, IntegerAndRealArguments) {
    EXPECT_DOUBLE_EQ(ifoi::binomial(5.0, 2), 10.0);
    EXPECT_DOUBLE_EQ(ifoi::binomial(5.0, 0), 1.0);
    EXPECT_DOUBLE_EQ(ifoi::binomial(-0.5, 2), 0.375);
    EXPECT_DOUBLE_EQ(ifoi::binomial(2.0, 3), 0.0);
}

}  // namespace
