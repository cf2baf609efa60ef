#include "fuzzynn/nn_operator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fuzzynn/errors.hpp"

namespace fuzzynn {

NodeGrid::NodeGrid(double a, double b, int n) : a_(a), b_(b), n_(n), h_(0.0) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("node grid needs finite a < b");
    }
    if (n < 1) throw DomainError("node grid needs n >= 1");
    h_ = (b - a) / n;
}

int NodeGrid::bracket(double x) const {
    if (!(x >= a_ && x <= b_)) {
        throw DomainError("point " + std::to_string(x) + " outside [a,b]");
    }
    int k = std::clamp(static_cast<int>(std::floor((x - a_) / h_)), 0, n_ - 1);
    while (k > 0 && x < node(k)) --k;
    while (k < n_ - 1 && x >= node(k + 1)) ++k;
    return k;
}

std::vector<Weight> weights(const NodeGrid& grid, const SigmoidalFunction& sigma, double x,
                            bool cull) {
    const double m = sigma.m();
    std::vector<Weight> out;
    if (!cull) {
        if (!(x >= grid.a() && x <= grid.b())) {
            throw DomainError("point " + std::to_string(x) + " outside [a,b]");
        }
        const double scale = 2.0 * m / grid.h();
        for (int k = 0; k <= grid.n(); ++k) {
            const double c = phi(sigma, scale * (x - grid.node(k)));
            if (c != 0.0) out.push_back({k, c});
        }
        return out;
    }

    const int k = grid.bracket(x);
    const double right = grid.node(k + 1);
    const double t = x >= right ? 1.0 : std::clamp((x - grid.node(k)) / grid.h(), 0.0, 1.0);
    const double s = 2.0 * m * t;
    // phi(s) = sigma(s+m) - sigma(s-m) and phi(s-2m) = sigma(s-m) - sigma(s-3m) share
    // the middle evaluation, so the pair sums to sigma(s+m) - sigma(s-3m) = 1.
    const double upper = sigma(s + m);
    const double middle = sigma(s - m);
    const double lower = sigma(s - 3.0 * m);
    if (const double c = upper - middle; c != 0.0) out.push_back({k, c});
    if (const double c = middle - lower; c != 0.0) out.push_back({k + 1, c});
    return out;
}

FuzzyNumber apply(const FuzzyFunction& f, const NodeGrid& grid, const SigmoidalFunction& sigma,
                  double x) {
    const auto w = weights(grid, sigma, x);
    std::vector<double> coeffs;
    std::vector<FuzzyNumber> values;
    coeffs.reserve(w.size());
    values.reserve(w.size());
    for (const auto& [k, c] : w) {
        coeffs.push_back(c);
        values.push_back(f(grid.node(k)));
    }
    return convex_combine(coeffs, values);
}

std::vector<FuzzyNumber> apply_curve(const FuzzyFunction& f, const NodeGrid& grid,
                                     const SigmoidalFunction& sigma, std::span<const double> xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!(xs[i] >= grid.a() && xs[i] <= grid.b())) {
            throw DomainError("point " + std::to_string(i) + " outside [a,b]", i);
        }
    }
    const Approximant approx(f, grid, sigma);
    std::vector<FuzzyNumber> out;
    out.reserve(xs.size());
    for (double x : xs) out.push_back(approx(x));
    return out;
}

Approximant::Approximant(const FuzzyFunction& f, NodeGrid grid, SigmoidalFunction sigma)
    : grid_(grid), sigma_(std::move(sigma)) {
    if (grid_.a() != f.a() || grid_.b() != f.b()) {
        throw DomainError("node grid and function domain differ");
    }
    nodes_.reserve(static_cast<std::size_t>(grid_.n()) + 1);
    for (int k = 0; k <= grid_.n(); ++k) nodes_.push_back(f(grid_.node(k)));
}

FuzzyNumber Approximant::operator()(double x) const {
    const auto w = weights(grid_, sigma_, x);
    std::vector<double> coeffs;
    std::vector<FuzzyNumber> values;
    for (const auto& [k, c] : w) {
        coeffs.push_back(c);
        values.push_back(node_value(k));
    }
    return convex_combine(coeffs, values);
}

Interval Approximant::level(double x, double lambda) const {
    Interval out{0.0, 0.0};
    for (const auto& [k, c] : weights(grid_, sigma_, x)) {
        const Interval I = node_value(k).level(lambda);
        out.lo += c * I.lo;
        out.hi += c * I.hi;
    }
    return out;
}

FuzzyFunction Approximant::as_function() const {
    return FuzzyFunction(grid_.a(), grid_.b(), [self = *this](double x) { return self(x); });
}

std::vector<double> linspace(double a, double b, std::size_t count) {
    std::vector<double> xs(count);
    if (count == 1) {
        xs[0] = a;
        return xs;
    }
    for (std::size_t i = 0; i < count; ++i) {
        xs[i] = i + 1 == count ? b : a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    return xs;
}

}  // namespace fuzzynn
