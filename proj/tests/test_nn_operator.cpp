#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "fuzzynn/corpus.hpp"
#include "fuzzynn/errors.hpp"
#include "fuzzynn/nn_operator.hpp"
#include "fuzzynn/verify.hpp"

using namespace fuzzynn;

namespace {

double weight_sum(const std::vector<Weight>& w) {
    double s = 0.0;
    for (const auto& [k, c] : w) s += c;
    return s;
}

// Piecewise-linear interpolation of random node values on [0,1].
FuzzyFunction random_function(std::mt19937_64& rng, int pieces) {
    std::vector<FuzzyNumber> knots;
    for (int i = 0; i <= pieces; ++i) knots.push_back(gen_fuzzy(rng, 8, 3.0));
    return FuzzyFunction(0.0, 1.0, [knots, pieces](double x) {
        const double pos = x * pieces;
        const int i = std::min(static_cast<int>(pos), pieces - 1);
        const double t = pos - i;
        const double c[] = {1.0 - t, t};
        const FuzzyNumber v[] = {knots[static_cast<std::size_t>(i)], knots[static_cast<std::size_t>(i) + 1]};
        return convex_combine(c, v);
    });
}

}  // namespace

TEST(NodeGrid, LastNodeIsB) {
    const NodeGrid g(0.0, 1.0, 3);
    EXPECT_EQ(g.node(3), 1.0);
    EXPECT_DOUBLE_EQ(g.h(), 1.0 / 3.0);
    EXPECT_THROW(NodeGrid(0, 1, 0), DomainError);
    EXPECT_THROW(NodeGrid(1, 1, 4), DomainError);
}

TEST(NodeGrid, Bracket) {
    const NodeGrid g(0.0, 1.0, 10);
    EXPECT_EQ(g.bracket(0.0), 0);
    EXPECT_EQ(g.bracket(0.05), 0);
    EXPECT_EQ(g.bracket(g.node(3)), 3);
    EXPECT_EQ(g.bracket(1.0), 9);
    for (double x : {0.0, 0.1, 0.3, 0.7, 0.99, 1.0}) {
        const int k = g.bracket(x);
        EXPECT_LE(g.node(k), x);
        EXPECT_LE(x, g.node(k + 1));
    }
    EXPECT_THROW(g.bracket(1.0000001), DomainError);
}

TEST(Weights, RampIsLinearInterpolation) {
    const NodeGrid g(0.0, 1.0, 4);
    const auto w = weights(g, ramp(), 0.3);
    ASSERT_EQ(w.size(), 2u);
    EXPECT_EQ(w[0].k, 1);
    EXPECT_NEAR(w[0].c, 0.8, 1e-15);
    EXPECT_NEAR(w[1].c, 0.2, 1e-15);
}

TEST(Weights, HeavisideSnapsToNearestNodeWithTiesLeft) {
    const NodeGrid g(0.0, 1.0, 4);
    auto w = weights(g, heaviside(), 0.3);
    ASSERT_EQ(w.size(), 1u);
    EXPECT_EQ(w[0].k, 1);
    w = weights(g, heaviside(), 0.4);
    ASSERT_EQ(w.size(), 1u);
    EXPECT_EQ(w[0].k, 2);
    w = weights(g, heaviside(), 0.375);  // midpoint
    ASSERT_EQ(w.size(), 1u);
    EXPECT_EQ(w[0].k, 1);
}

TEST(Weights, CulledMatchesLiteralSum) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (const auto& s : {ramp(1.0), smooth_ramp(1.0), ramp(2.0)}) {
        for (int n : {1, 3, 10, 57}) {
            const NodeGrid g(0.0, 1.0, n);
            for (int i = 0; i < 200; ++i) {
                const double x = U(rng);
                const auto culled = weights(g, s, x);
                const auto literal = weights(g, s, x, false);
                EXPECT_NEAR(weight_sum(culled), 1.0, 1e-12);
                EXPECT_NEAR(weight_sum(literal), 1.0, 1e-12);
                for (const auto& [k, c] : literal) {
                    double mine = 0.0;
                    for (const auto& wc : culled) {
                        if (wc.k == k) mine = wc.c;
                    }
                    EXPECT_NEAR(mine, c, 1e-12) << s.name() << " n=" << n << " x=" << x << " k=" << k;
                }
            }
        }
    }
}

TEST(Weights, PartitionOfUnityOnManyPoints) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(-2.0, 3.0);
    for (const auto& s : {ramp(1.0), heaviside(1.0), smooth_ramp(1.0)}) {
        const NodeGrid g(-2.0, 3.0, 37);
        for (int i = 0; i < 10000; ++i) EXPECT_NEAR(weight_sum(weights(g, s, U(rng))), 1.0, 1e-15);
    }
}

TEST(Apply, InterpolatesAtNodes) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_function(rng, 5);
        for (const auto& s : {ramp(1.0), heaviside(1.0), smooth_ramp(1.0)}) {
            const NodeGrid g(0.0, 1.0, 7);
            for (int k = 0; k <= g.n(); ++k) {
                const FuzzyNumber got = apply(f, g, s, g.node(k));
                const FuzzyNumber want = f(g.node(k));
                for (double l : {0.0, 0.25, 0.5, 1.0}) {
                    EXPECT_NEAR(got.level(l).lo, want.level(l).lo, 1e-12);
                    EXPECT_NEAR(got.level(l).hi, want.level(l).hi, 1e-12);
                }
            }
        }
    }
}

TEST(Apply, ConstantIsReproduced) {
    const auto entry = constant_function(2.5);
    const Approximant S(entry.function, NodeGrid(0, 1, 9), smooth_ramp());
    for (double x : linspace(0, 1, 41)) EXPECT_EQ(S(x).level(0.5), (Interval{2.5, 2.5}));
}

TEST(Apply, FastLevelPathMatchesFullNumber) {
    const auto entry = example_level_continuous();
    const Approximant S(entry.function, NodeGrid(0, 1, 10), ramp());
    for (double x : {0.0, 0.013, 0.5, 0.77, 1.0}) {
        for (double l : {0.3, 0.50005, 0.6, 0.8}) {
            const Interval a = S.level(x, l);
            const Interval b = S(x).level(l);
            EXPECT_DOUBLE_EQ(a.lo, b.lo);
            EXPECT_DOUBLE_EQ(a.hi, b.hi);
        }
    }
}

TEST(Apply, CurveReportsOffendingIndex) {
    const auto entry = constant_function(1.0);
    const double xs[] = {0.1, 0.5, 1.2, 0.3};
    try {
        apply_curve(entry.function, NodeGrid(0, 1, 4), ramp(), xs);
        FAIL() << "expected DomainError";
    } catch (const DomainError& e) {
        ASSERT_TRUE(e.index().has_value());
        EXPECT_EQ(*e.index(), 2u);
    }
}

TEST(Apply, DomainMismatch) {
    const auto entry = constant_function(1.0);
    EXPECT_THROW(Approximant(entry.function, NodeGrid(0, 2, 4), ramp()), DomainError);
}

TEST(Linspace, IncludesBothEnds) {
    const auto xs = linspace(0.0, 1.0, 10000);
    EXPECT_EQ(xs.front(), 0.0);
    EXPECT_EQ(xs.back(), 1.0);
    EXPECT_EQ(xs.size(), 10000u);
    EXPECT_EQ(linspace(2.0, 3.0, 1), std::vector<double>{2.0});
}
