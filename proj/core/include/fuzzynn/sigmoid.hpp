#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzynn {

/**
 * A nondecreasing sigmoid of class A(m): exactly 0 for x <= -m and exactly 1
 * for x >= m. Membership is a runtime contract; see check_class_A().
 */
class SigmoidalFunction {
public:
    using Eval = std::function<double(double)>;

    /// Throws NonPositiveM unless m > 0.
    SigmoidalFunction(std::string name, double m, Eval eval);

    const std::string& name() const { return name_; }
    double m() const { return m_; }
    double operator()(double x) const { return eval_(x); }

private:
    std::string name_;
    double m_;
    Eval eval_;
};

/// Linear ramp from (-m, 0) to (m, 1).
SigmoidalFunction ramp(double m = 1.0);

/// Unit step: 0 for x <= 0, 1 for x > 0. `m` only fixes the class A(m).
SigmoidalFunction heaviside(double m = 1.0);

/// C^1 cubic smoothstep between -m and m.
SigmoidalFunction smooth_ramp(double m = 1.0);

/// "ramp" (alias "sigma1"), "heaviside" ("sigma2") or "smooth_ramp". Throws UnknownSigma.
SigmoidalFunction sigmoid_by_name(std::string_view name, double m = 1.0);

/// Bump sigma(x + m) - sigma(x - m); supported on [-2m, 2m].
class BumpFunction {
public:
    explicit BumpFunction(SigmoidalFunction source) : source_(std::move(source)) {}

    const SigmoidalFunction& source() const { return source_; }
    double operator()(double x) const {
        const double m = source_.m();
        return source_(x + m) - source_(x - m);
    }

private:
    SigmoidalFunction source_;
};

inline double phi(const SigmoidalFunction& sigma, double x) {
    return sigma(x + sigma.m()) - sigma(x - sigma.m());
}

struct ClassCheckItem {
    std::string name;
    bool passed = true;
    double worst_violation = 0.0;
};

struct ClassReport {
    std::vector<ClassCheckItem> items;

    bool passed() const;
    const ClassCheckItem& item(const std::string& name) const;
};

/**
 * Numeric membership test for A(m) and the bump properties on a uniform probe
 * grid over [-3m, 3m]:
 *   "monotone"       sigma nondecreasing
 *   "boundary"       sigma == 0 on [-3m,-m], == 1 on [m,3m] (exact)
 *   "phi_nonnegative"
 *   "phi_unimodal"   nondecreasing for x < 0, nonincreasing for x > 0
 *   "phi_support"    phi == 0 for |x| >= 2m
 *   "phi_partition"  |phi(x) + phi(x - 2m) - 1| <= 1e-12 on [0, 2m]
 */
ClassReport check_class_A(const SigmoidalFunction& sigma, int probe_points = 10000);

}  // namespace fuzzynn
