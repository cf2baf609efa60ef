#pragma once

#include <string>

#include "fuzzynn/fuzzy_function.hpp"
#include "fuzzynn/metrics.hpp"

namespace fuzzynn {

enum class ModulusKind { analytic, empirical_lower_bound };

struct ModulusEstimate {
    double value = 0.0;
    ModulusKind kind = ModulusKind::empirical_lower_bound;
    /// Human-readable probe description, e.g. "uniform:201".
    std::string sampling;
};

enum class ModulusSource { prefer_analytic, empirical };

/**
 * omega_d(f, delta) estimated as the largest distance between f(x) and f(y)
 * over pairs of a uniform probe grid with |x - y| < delta (sliding window).
 * For geometric metrics the Hausdorff value (a lower bound) is used, so the
 * estimate never exceeds the true modulus of the sampled values.
 * Throws DomainError for delta <= 0 or probes < 2.
 */
ModulusEstimate empirical_modulus(const FuzzyFunction& f, double delta, Metric metric, int probes,
                                  const MetricOptions& options = {}, double lambda = 1.0);

/// omega(f, delta, lambda); closed form when the function carries one, unless
/// `source` asks for the empirical estimate.
ModulusEstimate level_modulus(const FuzzyFunction& f, double delta, double lambda, int probes,
                              ModulusSource source = ModulusSource::prefer_analytic);

}  // namespace fuzzynn
