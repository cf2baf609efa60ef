#include "fuzzynn/corpus.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "fuzzynn/errors.hpp"

namespace fuzzynn {

namespace {

// Gap of the lower endpoints at lambda > 1/2: (lambda - 1/2)^t with the
// convention e^0 = 1, which also covers t = 0.
double level_example_lower(double t, double lambda) {
    if (lambda <= 0.5) return 0.0;
    return t == 0.0 ? 1.0 : std::pow(lambda - 0.5, t);
}

std::string short_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

double parse_parameter(std::string_view id, std::string_view prefix, double fallback) {
    if (id.size() == prefix.size()) return fallback;
    if (id[prefix.size()] != ':') throw UnknownFunction("unknown function id '" + std::string(id) + "'");
    const std::string text(id.substr(prefix.size() + 1));
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) {
        throw UnknownFunction("bad parameter in function id '" + std::string(id) + "'");
    }
    return value;
}

}  // namespace

CorpusEntry example_level_continuous() {
    FuzzyFunction f(0.0, 1.0, [](double t) {
        return FuzzyNumber::analytic_unchecked(
            [t](double lambda) { return Interval{level_example_lower(t, lambda), 1.0}; });
    });
    f = f.with_continuity({Metric::level})
            .with_modulus(Metric::level, [](double delta, double lambda) {
                if (lambda <= 0.5) return 0.0;
                return 1.0 - std::pow(lambda - 0.5, std::min(delta, 1.0));
            });

    auto known = [](Metric metric, double t, double s, double lambda) -> std::optional<double> {
        if (t == s) return 0.0;
        switch (metric) {
            case Metric::level:
                return std::abs(level_example_lower(t, lambda) - level_example_lower(s, lambda));
            case Metric::sup:
                // sup over lambda > 1/2 of |e^t - e^s| reaches 1 as e -> 0 when one argument is 0.
                if (t == 0.0 || s == 0.0) return 1.0;
                return std::nullopt;
            default:
                return std::nullopt;
        }
    };
    return {"level-example", std::move(f), known};
}

CorpusEntry example_end_not_send() {
    FuzzyFunction f(0.0, 1.0, [](double t) {
        if (t == 0.0) return FuzzyNumber::crisp(0.0);
        return FuzzyNumber::sampled_unchecked({t, t}, {1.0, 1.0});
    });
    const auto one = [](double, double) { return 1.0; };
    for (Metric m : kAllMetrics) f = f.with_modulus(m, one);

    auto known = [](Metric, double t, double s, double) -> std::optional<double> {
        if (t == s) return 0.0;
        if (t == 0.0 || s == 0.0) return 1.0;
        return std::abs(t - s);
    };
    return {"end-not-send", std::move(f), known};
}

CorpusEntry smooth_triangular_family(double width) {
    if (!(width > 0.0) || !std::isfinite(width)) {
        throw NonPositiveWidth("triangular width must be positive");
    }
    FuzzyFunction f(0.0, 1.0, [width](double t) {
        return FuzzyNumber::sampled_unchecked({t - width, t}, {t + width, t});
    });
    const auto shift = [](double delta, double) { return std::min(delta, 1.0); };
    // The apex of a shifted triangle sees the other triangle's flank at
    // perpendicular distance |t - s| / sqrt(1 + w^2), which is below its level.
    const double flank = 1.0 / std::sqrt(1.0 + width * width);
    f = f.with_continuity({Metric::sup, Metric::level, Metric::sendograph, Metric::endograph})
            .with_modulus(Metric::sup, shift)
            .with_modulus(Metric::level, shift)
            .with_modulus(Metric::sendograph, shift)
            .with_modulus(Metric::endograph,
                          [flank](double delta, double) { return flank * std::min(delta, 1.0); });

    auto known = [flank](Metric metric, double t, double s, double) -> std::optional<double> {
        const double d = std::abs(t - s);
        return metric == Metric::endograph ? flank * d : d;
    };
    std::string id = "triangular:" + short_number(width);
    return {std::move(id), std::move(f), known};
}

CorpusEntry constant_function(double value) {
    const FuzzyNumber c = FuzzyNumber::crisp(value);
    FuzzyFunction f(0.0, 1.0, [c](double) { return c; });
    f = f.with_continuity({Metric::sup, Metric::level, Metric::sendograph, Metric::endograph});
    for (Metric m : kAllMetrics) f = f.with_modulus(m, [](double, double) { return 0.0; });
    auto known = [](Metric, double, double, double) -> std::optional<double> { return 0.0; };
    return {"constant:" + short_number(value), std::move(f), known};
}

CorpusEntry corpus_by_id(std::string_view id) {
    if (id == "level-example") return example_level_continuous();
    if (id == "end-not-send") return example_end_not_send();
    if (id.starts_with("triangular")) return smooth_triangular_family(parse_parameter(id, "triangular", 0.5));
    if (id.starts_with("constant")) return constant_function(parse_parameter(id, "constant", 1.0));
    throw UnknownFunction("unknown function id '" + std::string(id) + "'");
}

}  // namespace fuzzynn
