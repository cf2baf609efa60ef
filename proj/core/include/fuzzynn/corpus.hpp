#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "fuzzynn/fuzzy_function.hpp"

namespace fuzzynn {

/**
 * A named test function with its continuity metadata (on `function`) and
 * closed-form facts. `known_distance(metric, t, s, lambda)` returns the exact
 * distance between f(t) and f(s) when one is known.
 */
struct CorpusEntry {
    std::string id;
    FuzzyFunction function;
    std::function<std::optional<double>(Metric, double t, double s, double lambda)> known_distance;
};

/**
 * Level-continuous but not d_inf-continuous on [0,1]:
 *   f(t)^-(lambda) = 0 for lambda <= 1/2, (lambda - 1/2)^t above (t > 0),
 *   f(0)^-(lambda) = 0 for lambda <= 1/2, 1 above,  f(t)^+ = 1.
 * Level modulus at lambda = 1/2 + e: 1 - e^min(delta, 1).
 */
CorpusEntry example_level_continuous();

/**
 * f(t) = indicator of [t,1] for t > 0 and of {0} at t = 0.
 * Distances are |t - s| between positive arguments but equal 1 whenever
 * exactly one argument is 0, in every metric, so the entry carries no
 * continuity class and all its moduli are 1.
 */
CorpusEntry example_end_not_send();

/// f(t) = triangular(t - w, t, t + w) on [0,1]; a translation, continuous in every sense.
/// Throws NonPositiveWidth.
CorpusEntry smooth_triangular_family(double width);

/// f(t) = value for all t in [0,1].
CorpusEntry constant_function(double value);

/// "level-example", "end-not-send", "triangular[:w]" (w = 0.5), "constant[:c]" (c = 1).
/// Throws UnknownFunction.
CorpusEntry corpus_by_id(std::string_view id);

}  // namespace fuzzynn
