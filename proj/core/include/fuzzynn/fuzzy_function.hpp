#pragma once

#include <array>
#include <functional>
#include <initializer_list>
#include <string_view>

#include "fuzzynn/fuzzy_number.hpp"

namespace fuzzynn {

/// Distances / topologies on fuzzy numbers. `level` is the level-convergence
/// topology and is measured one lambda at a time.
enum class Metric { sup, level, sendograph, endograph };

inline constexpr std::array kAllMetrics{Metric::sup, Metric::level, Metric::sendograph,
                                        Metric::endograph};

std::string_view to_string(Metric metric);
/// Accepts "sup", "d_inf", "level", "sendograph", "endograph". Throws DomainError.
Metric parse_metric(std::string_view name);

/**
 * f: [a,b] -> fuzzy numbers, with continuity metadata and optional closed-form
 * moduli of continuity. Values are immutable; the with_* members return copies.
 */
class FuzzyFunction {
public:
    using Eval = std::function<FuzzyNumber(double)>;
    /// omega(delta, lambda); lambda is ignored by every metric except `level`.
    using Modulus = std::function<double(double delta, double lambda)>;

    FuzzyFunction(double a, double b, Eval eval);

    double a() const { return a_; }
    double b() const { return b_; }

    /// f(x). Throws DomainError outside [a,b].
    FuzzyNumber operator()(double x) const;

    bool is_continuous(Metric metric) const { return continuous_[index(metric)]; }
    const Modulus& analytic_modulus(Metric metric) const { return moduli_[index(metric)]; }
    bool has_analytic_modulus(Metric metric) const { return static_cast<bool>(moduli_[index(metric)]); }

    FuzzyFunction with_continuity(std::initializer_list<Metric> metrics) const;
    FuzzyFunction with_modulus(Metric metric, Modulus modulus) const;

private:
    static std::size_t index(Metric m) { return static_cast<std::size_t>(m); }

    double a_;
    double b_;
    Eval eval_;
    std::array<bool, 4> continuous_{};
    std::array<Modulus, 4> moduli_{};
};

}  // namespace fuzzynn
