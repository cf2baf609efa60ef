#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fuzzynn/fuzzy_function.hpp"
#include "fuzzynn/fuzzy_number.hpp"
#include "fuzzynn/sigmoid.hpp"

namespace fuzzynn {

/// Uniform nodes x_k = a + k*h, h = (b-a)/n, with x_n == b exactly.
class NodeGrid {
public:
    NodeGrid(double a, double b, int n);

    double a() const { return a_; }
    double b() const { return b_; }
    int n() const { return n_; }
    double h() const { return h_; }
    double node(int k) const { return k == n_ ? b_ : a_ + k * h_; }

    /// k in [0, n-1] with node(k) <= x <= node(k+1). Throws DomainError outside [a,b].
    int bracket(double x) const;

private:
    double a_;
    double b_;
    int n_;
    double h_;
};

struct Weight {
    int k = 0;
    double c = 0.0;
};

/**
 * Nonzero coefficients c_k = phi((2m/h)(x - x_k)) of the operator at x.
 *
 * With `cull` (default) only the bracketing pair is evaluated, in a telescoped
 * form whose sum is exactly 1. Without it every k = 0..n is evaluated literally.
 */
std::vector<Weight> weights(const NodeGrid& grid, const SigmoidalFunction& sigma, double x,
                            bool cull = true);

/// S_{n,sigma}(f, x) = sum_k c_k f(x_k).
FuzzyNumber apply(const FuzzyFunction& f, const NodeGrid& grid, const SigmoidalFunction& sigma,
                  double x);

/// Element-wise apply; DomainError carries the index of the first bad point.
std::vector<FuzzyNumber> apply_curve(const FuzzyFunction& f, const NodeGrid& grid,
                                     const SigmoidalFunction& sigma, std::span<const double> xs);

/// S_{n,sigma}(f, .) with node values evaluated once.
class Approximant {
public:
    Approximant(const FuzzyFunction& f, NodeGrid grid, SigmoidalFunction sigma);

    const NodeGrid& grid() const { return grid_; }
    const SigmoidalFunction& sigma() const { return sigma_; }
    const FuzzyNumber& node_value(int k) const { return nodes_[static_cast<std::size_t>(k)]; }

    FuzzyNumber operator()(double x) const;
    /// [S(f,x)]^lambda without building the combined number.
    Interval level(double x, double lambda) const;

    FuzzyFunction as_function() const;

private:
    NodeGrid grid_;
    SigmoidalFunction sigma_;
    std::vector<FuzzyNumber> nodes_;
};

/// Evenly spaced points including both ends (count >= 2; count == 1 gives {a}).
std::vector<double> linspace(double a, double b, std::size_t count);

}  // namespace fuzzynn
