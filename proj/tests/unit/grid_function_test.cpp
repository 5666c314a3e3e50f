#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "ifoi/error.hpp"
#include "ifoi/grid_function.hpp"

namespace {

using ifoi::GridFunction;

TEST(GridFunction, SampleBuildsUniformNodes) {
    const auto g = GridFunction::sample(4, [](double x) { return x * x; });
    EXPECT_EQ(g.size(), 5u);
    EXPECT_EQ(g.intervals(), 4u);
    EXPECT_DOUBLE_EQ(g.h(), 0.25);
    EXPECT_DOUBLE_EQ(g.x(3), 0.75);
    EXPECT_DOUBLE_EQ(g[2], 0.25);
    EXPECT_DOUBLE_EQ(g.back(), 1.0);
    EXPECT_TRUE(g.covers(1.0));
    EXPECT_FALSE(g.covers(2.0));
}

TEST(GridFunction, SampleOnLongerInterval) {
    const auto g = GridFunction::sample(10, [](double x) { return x; }, 2.0);
    EXPECT_DOUBLE_EQ(g.h(), 0.2);
    EXPECT_NEAR(g.length(), 2.0, 1e-15);
}

TEST(GridFunction, RejectsInvalidInput) {
    EXPECT_THROW(GridFunction(0.0, {1.0, 2.0}), ifoi::DomainError);
    EXPECT_THROW(GridFunction(-0.1, {1.0, 2.0}), ifoi::DomainError);
    EXPECT_THROW(GridFunction(0.1, {1.0}), ifoi::DomainError);
    EXPECT_THROW(GridFunction(0.1, {1.0, std::numeric_limits<double>::quiet_NaN()}),
                 ifoi::DomainError);
    EXPECT_THROW(GridFunction(0.1, {1.0, std::numeric_limits<double>::infinity()}),
                 ifoi::DomainError);
}

TEST(GridFunction, ZerosAndSupDistance) {
    const auto z = GridFunction::zeros(8);
    const auto g = GridFunction::sample(8, [](double x) { return std::sin(3.0 * x); });
    EXPECT_DOUBLE_EQ(ifoi::sup_distance(z, z), 0.0);
    double expected = 0.0;
    for (std::size_t j = 0; j < g.size(); ++j) expected = std::max(expected, std::abs(g[j]));
    EXPECT_DOUBLE_EQ(ifoi::sup_distance(z, g), expected);
}

TEST(GridFunction, SupDistanceNeedsMatchingGrids) {
    const auto a = GridFunction::zeros(8);
    const auto b = GridFunction::zeros(16);
    EXPECT_FALSE(a.same_grid(b));
    EXPECT_THROW(ifoi::sup_distance(a, b), ifoi::DomainError);
}

}  // namespace
