#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "fuzzynn/corpus.hpp"
#include "fuzzynn/fuzzy_number.hpp"
#include "fuzzynn/metrics.hpp"
#include "fuzzynn/sigmoid.hpp"

namespace fuzzynn {

/// Parameters of a random Sampled fuzzy number with support inside [-bound, bound].
struct RandomFuzzySpec {
    int levels = 16;  // 0 yields an interval-valued (rectangular) number
    double bound = 5.0;
    std::uint64_t seed = 0;
};

/// Draws 2(L+1) uniform values in [-M, M], sorts them, and uses the lower half
/// (ascending) as lo and the upper half (descending) as hi. Deterministic in seed.
FuzzyNumber gen_fuzzy(const RandomFuzzySpec& spec);
FuzzyNumber gen_fuzzy(std::mt19937_64& rng, int levels, double bound);

/// Outcome of one randomized property. Fails iff worst_slack > 0, where slack is
/// the violation left after subtracting the allowed numeric budget.
struct PropertyReport {
    std::string id;
    long trials = 0;
    double worst_slack = -std::numeric_limits<double>::infinity();
    std::uint64_t seed = 0;

    // NaN slack (a broken evaluation) counts as a violation and sticks.
    bool passed() const { return !(worst_slack > 0.0) && !std::isnan(worst_slack); }
    void observe(double slack) {
        if (std::isnan(worst_slack)) return;
        if (slack > worst_slack || std::isnan(slack)) worst_slack = slack;
    }
};

/// `id,trials,worst_slack,seed,PASS|FAIL` with 17 significant digits.
std::string format_report(const PropertyReport& report);

/// Per-trial generator derived from (master seed, trial index).
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

struct VerifyConfig {
    std::uint64_t seed = 20240607;
    long trials = 1000;
    double spacing = 1e-3;
    int levels = 16;
    double bound = 5.0;
};

/// Class membership items for the ramp, Heaviside and smooth-ramp sigmoids.
std::vector<PropertyReport> run_sigmoid_class(int probe_points = 10000);

/// Exact planar inequality, both forms:
///   d((x,b), (a*y1+(1-a)*y2, min(k1,k2))) <= sqrt(d((x,b),(y1,k1))^2 + d((x,b),(y2,k2))^2)
///   and the variant with x = a*x1 + (1-a)*x2 on the right-hand side. Tolerance 1e-12.
PropertyReport run_plane_inequality(const VerifyConfig& config);

/**
 * Scaling, subadditivity and convex-combination bounds for D_S (three items)
 * or D_E (four items: the combination bound in root-sum-square and sqrt(2)*max
 * form). The budget is the certified error bound of every Hausdorff value.
 */
std::vector<PropertyReport> run_metric_properties(Metric metric, const VerifyConfig& config);

/// Identity, separation, symmetry and triangle inequality for sup / D_S / D_E.
std::vector<PropertyReport> run_metric_axioms(Metric metric, const VerifyConfig& config);

/// D_E <= D_S on random pairs.
PropertyReport run_ordering(const VerifyConfig& config);

/// z in [a*u + (1-a)*v]^lambda iff z = a*x + (1-a)*y with x, y in the levels of u, v.
PropertyReport run_convex_levels(const VerifyConfig& config);

/// Endograph points combine (convexly in x, min in lambda) into end(u) / end(a*u+(1-a)*v).
std::vector<PropertyReport> run_endograph_membership(const VerifyConfig& config);

struct JacksonOptions {
    std::vector<double> levels{0.50005, 0.6, 0.8};  // Metric::level only
    int probes = 10000;                              // x-grid for sup / level
    int geometric_probes = 101;                      // x-grid for D_S / D_E
    MetricOptions metric{};
    double target = 0.05;  // corollary radius; <= 0 skips the corollary
};

/**
 * For each n: sup over the x-grid of the error of S_{n,sigma} f under `theorem`
 * against the Jackson bound (omega for level and sup, sqrt(2)*omega for D_S
 * and D_E, with omega the entry's closed-form modulus at h = (b-a)/n).
 * When the entry is continuous in that sense, also finds n with bound < target
 * and checks the measured error is below target.
 * Throws MissingAnalyticModulus.
 */
std::vector<PropertyReport> run_jackson_suite(const CorpusEntry& entry, const SigmoidalFunction& sigma,
                                              std::span<const int> ns, Metric theorem,
                                              const JacksonOptions& options = {});

/// Sup over xs of the error of S_{n,sigma} f at one n; geometric metrics return
/// the certified pair, the others an exact-formula value with zero bound.
HausdorffResult measure_sup_error(const FuzzyFunction& f, const SigmoidalFunction& sigma, int n,
                                  Metric metric, std::span<const double> xs,
                                  const MetricOptions& options = {}, double lambda = 1.0);

}  // namespace fuzzynn
