#include "fuzzynn/fuzzy_function.hpp"

#include <cmath>
#include <string>

#include "fuzzynn/errors.hpp"

namespace fuzzynn {

std::string_view to_string(Metric metric) {
    switch (metric) {
        case Metric::sup: return "sup";
        case Metric::level: return "level";
        case Metric::sendograph: return "sendograph";
        case Metric::endograph: return "endograph";
    }
    return "?";
}

Metric parse_metric(std::string_view name) {
    if (name == "sup" || name == "d_inf") return Metric::sup;
    if (name == "level") return Metric::level;
    if (name == "sendograph" || name == "D_S") return Metric::sendograph;
    if (name == "endograph" || name == "D_E") return Metric::endograph;
    throw DomainError("unknown metric '" + std::string(name) + "'");
}

FuzzyFunction::FuzzyFunction(double a, double b, Eval eval) : a_(a), b_(b), eval_(std::move(eval)) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("function domain needs finite a < b");
    }
    if (!eval_) throw DomainError("function evaluator is empty");
}

FuzzyNumber FuzzyFunction::operator()(double x) const {
    if (!(x >= a_ && x <= b_)) {
        throw DomainError("argument " + std::to_string(x) + " outside the function domain");
    }
    return eval_(x);
}

FuzzyFunction FuzzyFunction::with_continuity(std::initializer_list<Metric> metrics) const {
    FuzzyFunction copy = *this;
    for (Metric m : metrics) copy.continuous_[index(m)] = true;
    return copy;
}

FuzzyFunction FuzzyFunction::with_modulus(Metric metric, Modulus modulus) const {
    FuzzyFunction copy = *this;
    copy.moduli_[index(metric)] = std::move(modulus);
    return copy;
}

}  // namespace fuzzynn
