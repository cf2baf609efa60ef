#include "fuzzynn/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "fuzzynn/errors.hpp"
#include "fuzzynn/nn_operator.hpp"

namespace fuzzynn {

ModulusEstimate empirical_modulus(const FuzzyFunction& f, double delta, Metric metric, int probes,
                                  const MetricOptions& options, double lambda) {
    if (!(delta > 0.0)) throw DomainError("modulus delta must be positive");
    if (probes < 2) throw DomainError("modulus needs at least two probes");
    if (metric == Metric::level && !(lambda >= 0.0 && lambda <= 1.0)) {
        throw DomainError("modulus level outside [0,1]");
    }

    const auto xs = linspace(f.a(), f.b(), static_cast<std::size_t>(probes));
    std::vector<FuzzyNumber> values;
    values.reserve(xs.size());
    for (double x : xs) values.push_back(f(x));

    double best = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size() && xs[j] - xs[i] < delta; ++j) {
            best = std::max(best, distance(metric, values[i], values[j], options, lambda).value);
        }
    }
    return {best, ModulusKind::empirical_lower_bound, "uniform:" + std::to_string(probes)};
}

ModulusEstimate level_modulus(const FuzzyFunction& f, double delta, double lambda, int probes,
                              ModulusSource source) {
    if (!(delta > 0.0)) throw DomainError("modulus delta must be positive");
    if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("modulus level outside [0,1]");
    if (source == ModulusSource::prefer_analytic && f.has_analytic_modulus(Metric::level)) {
        return {f.analytic_modulus(Metric::level)(delta, lambda), ModulusKind::analytic, "closed form"};
    }
    return empirical_modulus(f, delta, Metric::level, probes, {}, lambda);
}

}  // namespace fuzzynn
