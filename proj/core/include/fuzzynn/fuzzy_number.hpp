#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace fuzzynn {

/// Closed real interval [lo, hi].
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Uniform partition of [0,1] into `resolution` steps: levels i/L, i = 0..L.
class LevelGrid {
public:
    explicit LevelGrid(int resolution);

    int resolution() const { return resolution_; }
    std::size_t size() const { return static_cast<std::size_t>(resolution_) + 1; }

    /// Level i/L; the last level is exactly 1.
    double level(std::size_t i) const {
        return i == static_cast<std::size_t>(resolution_)
                   ? 1.0
                   : static_cast<double>(i) / resolution_;
    }

    friend bool operator==(const LevelGrid&, const LevelGrid&) = default;

private:
    int resolution_;
};

/**
 * A fuzzy number stored through its level endpoint functions
 * [u]^lambda = [lo(lambda), hi(lambda)].
 *
 * Two representations share one value type:
 *  - Analytic: a closure lambda -> interval, exact at every level (jumps allowed);
 *  - Sampled: endpoint values on a LevelGrid, linearly interpolated between nodes.
 *
 * Values are immutable and cheap to copy (shared payload).
 */
class FuzzyNumber {
public:
    using Endpoint = std::function<double(double)>;
    using LevelFunction = std::function<Interval(double)>;

    /// Absolute slack accepted by the monotonicity and crossing checks.
    static constexpr double kTolerance = 1e-12;
    /// Number of probe steps used to validate Analytic inputs.
    static constexpr int kProbeLevels = 1024;

    /// Analytic number; validated on a probe grid of kProbeLevels levels.
    static FuzzyNumber from_levels(Endpoint lo, Endpoint hi);
    /// Sampled number on LevelGrid(lo.size() - 1); validated node by node.
    static FuzzyNumber from_levels(std::vector<double> lo, std::vector<double> hi);

    static FuzzyNumber crisp(double x);
    /// Triangular number with support [a, c] and peak b (exact, Sampled on one step).
    static FuzzyNumber triangular(double a, double b, double c);

    /// [u]^lambda. Throws DomainError outside [0,1].
    Interval level(double lambda) const;
    Interval support() const { return level(0.0); }

    bool is_sampled() const;
    /// Grid of a Sampled number, empty for Analytic ones.
    std::optional<LevelGrid> grid() const;
    /// Node values of a Sampled number (empty span for Analytic).
    std::span<const double> lower_nodes() const;
    std::span<const double> upper_nodes() const;

    /// Evaluates the endpoints on LevelGrid(levels). Throws MonotonicityViolation /
    /// CrossingViolation when the source was not a valid fuzzy number.
    FuzzyNumber sample(int levels) const;

    // Unchecked constructors for results that are valid by construction.
    static FuzzyNumber analytic_unchecked(LevelFunction level);
    static FuzzyNumber sampled_unchecked(std::vector<double> lo, std::vector<double> hi);

private:
    struct Payload;
    explicit FuzzyNumber(std::shared_ptr<const Payload> payload) : payload_(std::move(payload)) {}

    std::shared_ptr<const Payload> payload_;
};

/// Level-wise Minkowski sum.
FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v);

/// Scalar multiple; endpoints swap for alpha < 0.
FuzzyNumber scale(double alpha, const FuzzyNumber& u);

/// Sum of coeffs[i] * values[i] with nonnegative coefficients.
/// Throws NegativeCoefficient, or DomainError on empty / mismatched input.
FuzzyNumber convex_combine(std::span<const double> coeffs, std::span<const FuzzyNumber> values);

/// max |z| over the support.
double support_bound(const FuzzyNumber& u);

inline FuzzyNumber operator+(const FuzzyNumber& u, const FuzzyNumber& v) { return add(u, v); }
inline FuzzyNumber operator*(double alpha, const FuzzyNumber& u) { return scale(alpha, u); }

}  // namespace fuzzynn
