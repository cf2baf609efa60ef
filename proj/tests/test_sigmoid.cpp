#include <gtest/gtest.h>

#include <cmath>

#include "fuzzynn/errors.hpp"
#include "fuzzynn/sigmoid.hpp"

using namespace fuzzynn;

TEST(Sigmoid, RampValues) {
    const auto s = ramp(1.0);
    EXPECT_EQ(s(-2.0), 0.0);
    EXPECT_EQ(s(-1.0), 0.0);
    EXPECT_EQ(s(0.0), 0.5);
    EXPECT_EQ(s(0.5), 0.75);
    EXPECT_EQ(s(1.0), 1.0);
    EXPECT_EQ(s(7.0), 1.0);
}

TEST(Sigmoid, HeavisideIsZeroAtOrigin) {
    const auto s = heaviside();
    EXPECT_EQ(s(0.0), 0.0);
    EXPECT_EQ(s(1e-300), 1.0);
    EXPECT_EQ(s(-1e-300), 0.0);
}

TEST(Sigmoid, NonPositiveMThrows) {
    EXPECT_THROW(ramp(0.0), NonPositiveM);
    EXPECT_THROW(heaviside(-1.0), NonPositiveM);
    EXPECT_THROW(smooth_ramp(NAN), NonPositiveM);
}

TEST(Sigmoid, ByName) {
    EXPECT_EQ(sigmoid_by_name("sigma1").name(), "ramp");
    EXPECT_EQ(sigmoid_by_name("heaviside", 2.0).m(), 2.0);
    EXPECT_THROW(sigmoid_by_name("tanh"), UnknownSigma);
}

TEST(Bump, RampBumpIsHat) {
    const auto s = ramp(1.0);
    EXPECT_EQ(phi(s, 0.0), 1.0);
    EXPECT_EQ(phi(s, 1.0), 0.5);
    EXPECT_EQ(phi(s, -1.5), 0.25);
    EXPECT_EQ(phi(s, 2.0), 0.0);
    EXPECT_EQ(phi(s, -2.0), 0.0);
}

TEST(Bump, HeavisideBumpIsHalfOpenIndicator) {
    const auto s = heaviside(1.0);
    // phi(x) = 1 on (-1, 1], 0 elsewhere.
    EXPECT_EQ(phi(s, -1.0), 0.0);
    EXPECT_EQ(phi(s, -0.999), 1.0);
    EXPECT_EQ(phi(s, 1.0), 1.0);
    EXPECT_EQ(phi(s, 1.001), 0.0);
}

TEST(ClassA, AllBuiltinsPass) {
    for (const auto& s : {ramp(1.0), heaviside(1.0), smooth_ramp(1.0), ramp(3.0), smooth_ramp(0.25)}) {
        const auto report = check_class_A(s);
        EXPECT_TRUE(report.passed()) << s.name();
        EXPECT_EQ(report.items.size(), 6u);
    }
}

TEST(ClassA, DetectsBadBoundary) {
    const SigmoidalFunction leaky("leaky", 1.0, [](double x) { return 0.5 + 0.5 * std::tanh(x); });
    const auto report = check_class_A(leaky);
    EXPECT_FALSE(report.passed());
    EXPECT_FALSE(report.item("boundary").passed);
    EXPECT_TRUE(report.item("monotone").passed);
}

TEST(ClassA, DetectsNonMonotone) {
    const SigmoidalFunction wiggly("wiggly", 1.0, [](double x) {
        if (x <= -1) return 0.0;
        if (x >= 1) return 1.0;
        return 0.5 + 0.5 * x + 0.2 * std::sin(8 * x);
    });
    const auto report = check_class_A(wiggly);
    EXPECT_FALSE(report.item("monotone").passed);
    EXPECT_GT(report.item("monotone").worst_violation, 0.0);
}
