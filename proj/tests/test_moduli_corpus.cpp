#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "fuzzynn/corpus.hpp"
#include "fuzzynn/errors.hpp"
#include "fuzzynn/metrics.hpp"
#include "fuzzynn/moduli.hpp"

using namespace fuzzynn;

TEST(Corpus, LookupById) {
    EXPECT_EQ(corpus_by_id("level-example").id, "level-example");
    EXPECT_EQ(corpus_by_id("end-not-send").id, "end-not-send");
    EXPECT_EQ(corpus_by_id("triangular").id, "triangular:0.5");
    EXPECT_EQ(corpus_by_id("triangular:0.25").id, "triangular:0.25");
    EXPECT_EQ(corpus_by_id("constant:-2").id, "constant:-2");
    EXPECT_THROW(corpus_by_id("triangular:abc"), UnknownFunction);
    EXPECT_THROW(corpus_by_id("triangularx"), UnknownFunction);
    EXPECT_THROW(corpus_by_id("sine"), UnknownFunction);
    EXPECT_THROW(corpus_by_id("triangular:0"), NonPositiveWidth);
}

TEST(Corpus, LevelExampleValues) {
    const auto e = example_level_continuous();
    const auto& f = e.function;
    EXPECT_TRUE(f.is_continuous(Metric::level));
    EXPECT_FALSE(f.is_continuous(Metric::sup));
    EXPECT_EQ(f(0.3).level(0.4), (Interval{0.0, 1.0}));
    EXPECT_DOUBLE_EQ(f(0.5).level(0.75).lo, 0.5);  // 0.25^0.5
    EXPECT_EQ(f(0.0).level(0.75), (Interval{1.0, 1.0}));
    EXPECT_EQ(f(0.0).level(0.5), (Interval{0.0, 1.0}));
    EXPECT_THROW(f(1.5), DomainError);
}

TEST(Corpus, LevelExampleModulusAgreesWithEmpirical) {
    const auto e = example_level_continuous();
    for (double lambda : {0.6, 0.8}) {
        for (double delta : {0.05, 0.2}) {
            const auto closed = level_modulus(e.function, delta, lambda, 0);
            EXPECT_EQ(closed.kind, ModulusKind::analytic);
            const double want = 1.0 - std::pow(lambda - 0.5, delta);
            EXPECT_DOUBLE_EQ(closed.value, want);
            const auto emp = level_modulus(e.function, delta, lambda, 2001, ModulusSource::empirical);
            EXPECT_EQ(emp.kind, ModulusKind::empirical_lower_bound);
            EXPECT_LE(emp.value, want + 1e-12);
            EXPECT_GT(emp.value, 0.9 * want);
        }
    }
    EXPECT_EQ(level_modulus(e.function, 0.1, 0.4, 0).value, 0.0);
}

TEST(Corpus, EndNotSendKnownDistances) {
    const auto e = example_end_not_send();
    const MetricOptions opt{};
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> U(0.01, 1.0);
    for (int i = 0; i < 10; ++i) {
        const double t = U(rng), s = U(rng);
        const auto de = endograph_distance(e.function(t), e.function(s), opt);
        const double want = *e.known_distance(Metric::endograph, t, s, 1.0);
        EXPECT_NEAR(want, std::abs(t - s), 0.0);
        EXPECT_LE(de.value, want + 1e-12);
        EXPECT_GE(de.upper(), want - 1e-12);
    }
    // Against the point value at 0 both geometric distances are 1.
    const auto ds = sendograph_distance(e.function(0.25), e.function(0.0), opt);
    EXPECT_NEAR(ds.value, 1.0, ds.error_bound);
    const auto de = endograph_distance(e.function(0.25), e.function(0.0), opt);
    EXPECT_NEAR(de.value, 1.0, de.error_bound);
    EXPECT_EQ(*e.known_distance(Metric::endograph, 0.25, 0.0, 1.0), 1.0);
}

TEST(Corpus, TriangularKnownDistances) {
    const auto e = smooth_triangular_family(0.5);
    const double flank = 1.0 / std::sqrt(1.25);
    const auto u = e.function(0.2);
    const auto v = e.function(0.6);
    EXPECT_NEAR(sup_distance(u, v), 0.4, 1e-15);
    const auto de = endograph_distance(u, v);
    EXPECT_LE(de.value, 0.4 * flank + 1e-12);
    EXPECT_GE(de.upper(), 0.4 * flank);
    EXPECT_DOUBLE_EQ(*e.known_distance(Metric::endograph, 0.2, 0.6, 1.0), 0.4 * flank);
    EXPECT_DOUBLE_EQ(e.function.analytic_modulus(Metric::sup)(3.0, 1.0), 1.0);
}

TEST(Corpus, ConstantHasZeroModuli) {
    const auto e = constant_function(3.0);
    for (Metric m : kAllMetrics) {
        EXPECT_TRUE(e.function.is_continuous(m));
        EXPECT_EQ(e.function.analytic_modulus(m)(0.5, 0.5), 0.0);
    }
}

TEST(Moduli, EmpiricalIsWindowed) {
    const auto e = smooth_triangular_family(0.5);
    // Probe spacing 0.01; pairs closer than 0.045 reach 0.04.
    const auto est = empirical_modulus(e.function, 0.045, Metric::sup, 101);
    EXPECT_NEAR(est.value, 0.04, 1e-12);
    EXPECT_EQ(est.sampling, "uniform:101");
    EXPECT_THROW(empirical_modulus(e.function, 0.0, Metric::sup, 101), DomainError);
    EXPECT_THROW(empirical_modulus(e.function, 0.1, Metric::sup, 1), DomainError);
}

TEST(Moduli, FallsBackToEmpiricalWithoutClosedForm) {
    const FuzzyFunction f(0, 1, [](double x) { return FuzzyNumber::crisp(x * x); });
    const auto est = level_modulus(f, 0.05, 0.5, 11);
    EXPECT_EQ(est.kind, ModulusKind::empirical_lower_bound);
    EXPECT_EQ(est.value, 0.0);  // no pair that close on an 0.1 grid
    EXPECT_NEAR(level_modulus(f, 0.15, 0.5, 11).value, 0.19, 1e-12);
}

TEST(FuzzyFunction, MetricNames) {
    EXPECT_EQ(parse_metric("d_inf"), Metric::sup);
    EXPECT_EQ(parse_metric("D_S"), Metric::sendograph);
    EXPECT_EQ(parse_metric("endograph"), Metric::endograph);
    EXPECT_EQ(to_string(Metric::level), "level");
    EXPECT_THROW(parse_metric("l2"), DomainError);
}
