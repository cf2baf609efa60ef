#include "fuzzynn/sigmoid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fuzzynn/errors.hpp"

namespace fuzzynn {

namespace {

constexpr double kPartitionTolerance = 1e-12;

void record(ClassCheckItem& item, double violation) {
    if (violation > item.worst_violation) item.worst_violation = violation;
}

}  // namespace

SigmoidalFunction::SigmoidalFunction(std::string name, double m, Eval eval)
    : name_(std::move(name)), m_(m), eval_(std::move(eval)) {
    if (!(m > 0.0) || !std::isfinite(m)) {
        throw NonPositiveM("sigmoid half-width m must be positive");
    }
    if (!eval_) throw DomainError("sigmoid evaluator is empty");
}

SigmoidalFunction ramp(double m) {
    return SigmoidalFunction("ramp", m, [m](double x) {
        if (x <= -m) return 0.0;
        if (x >= m) return 1.0;
        return (x + m) / (2.0 * m);
    });
}

SigmoidalFunction heaviside(double m) {
    return SigmoidalFunction("heaviside", m, [](double x) { return x > 0.0 ? 1.0 : 0.0; });
}

SigmoidalFunction smooth_ramp(double m) {
    return SigmoidalFunction("smooth_ramp", m, [m](double x) {
        if (x <= -m) return 0.0;
        if (x >= m) return 1.0;
        const double t = (x + m) / (2.0 * m);
        return t * t * (3.0 - 2.0 * t);
    });
}

bool ClassReport::passed() const {
    return std::all_of(items.begin(), items.end(), [](const auto& i) { return i.passed; });
}

const ClassCheckItem& ClassReport::item(const std::string& name) const {
    for (const auto& i : items) {
        if (i.name == name) return i;
    }
    throw std::out_of_range("no class check item named " + name);
}

ClassReport check_class_A(const SigmoidalFunction& sigma, int probe_points) {
    if (probe_points < 3) throw DomainError("check_class_A needs at least 3 probe points");
    const double m = sigma.m();
    const double lo = -3.0 * m;
    const double hi = 3.0 * m;
    std::vector<double> xs(static_cast<std::size_t>(probe_points));
    for (int i = 0; i < probe_points; ++i) {
        xs[i] = i == probe_points - 1 ? hi : lo + (hi - lo) * i / (probe_points - 1);
    }

    ClassCheckItem monotone{"monotone"};
    ClassCheckItem boundary{"boundary"};
    ClassCheckItem nonneg{"phi_nonnegative"};
    ClassCheckItem unimodal{"phi_unimodal"};
    ClassCheckItem support{"phi_support"};
    ClassCheckItem partition{"phi_partition"};

    double prev_sigma = sigma(xs[0]);
    double prev_phi = phi(sigma, xs[0]);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        const double s = sigma(x);
        const double p = phi(sigma, x);
        if (i > 0) {
            record(monotone, prev_sigma - s);
            if (x < 0.0) record(unimodal, prev_phi - p);
            if (xs[i - 1] > 0.0) record(unimodal, p - prev_phi);
        }
        if (x <= -m) record(boundary, std::abs(s));
        if (x >= m) record(boundary, std::abs(s - 1.0));
        record(nonneg, -p);
        if (std::abs(x) >= 2.0 * m) record(support, std::abs(p));
        if (x >= 0.0 && x <= 2.0 * m) {
            record(partition, std::abs(p + phi(sigma, x - 2.0 * m) - 1.0));
        }
        prev_sigma = s;
        prev_phi = p;
    }

    monotone.passed = monotone.worst_violation <= 0.0;
    boundary.passed = boundary.worst_violation == 0.0;
    nonneg.passed = nonneg.worst_violation <= 0.0;
    unimodal.passed = unimodal.worst_violation <= 0.0;
    support.passed = support.worst_violation == 0.0;
    partition.passed = partition.worst_violation <= kPartitionTolerance;
    return ClassReport{{monotone, boundary, nonneg, unimodal, support, partition}};
}

SigmoidalFunction sigmoid_by_name(std::string_view name, double m) {
    if (name == "ramp" || name == "sigma1") return ramp(m);
    if (name == "heaviside" || name == "sigma2") return heaviside(m);
    if (name == "smooth_ramp") return smooth_ramp(m);
    throw UnknownSigma("unknown sigmoid '" + std::string(name) + "'");
}

}  // namespace fuzzynn
