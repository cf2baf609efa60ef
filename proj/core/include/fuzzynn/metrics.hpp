#pragma once

#include <span>
#include <vector>

#include "fuzzynn/fuzzy_function.hpp"
#include "fuzzynn/fuzzy_number.hpp"

namespace fuzzynn {

/// Point of the (x, lambda) plane; distances are Euclidean.
struct PlanePoint {
    double x = 0.0;
    double lambda = 0.0;
};

double plane_distance(PlanePoint p, PlanePoint q);

/// Distance from p to the closed segment [a, b].
double point_segment_distance(PlanePoint p, PlanePoint a, PlanePoint b);

/// Trapezoid between two consecutive levels.
struct Strip {
    double lambda0, lo0, hi0;
    double lambda1, lo1, hi1;
};

/**
 * Region {(x, lambda) : lo(lambda) <= x <= hi(lambda)} with piecewise-linear
 * chains through the given nodes. Levels must be strictly increasing and
 * lo <= hi at every node. Consecutive strips with collinear chains are merged.
 *
 * Zero-width strips are allowed; the region then degenerates to segments.
 */
class RegionGeometry {
public:
    RegionGeometry(std::vector<double> levels, std::vector<double> lo, std::vector<double> hi);

    std::span<const double> levels() const { return levels_; }
    std::size_t strip_count() const { return levels_.size() - 1; }
    Strip strip(std::size_t i) const;
    std::vector<Strip> strips() const;

    /// Closed boundary polyline: bottom edge, right chain upward, top edge, left chain downward.
    std::vector<PlanePoint> boundary() const;

    /// Horizontal slice at lambda (must lie within the level range).
    Interval slice(double lambda) const;
    bool contains(PlanePoint p) const;
    /// Exact Euclidean distance to the region (0 inside).
    double distance(PlanePoint p) const;
    /// Distance to the (convex) strip i alone.
    double strip_distance(std::size_t i, PlanePoint p) const;
    /**
     * Upper bound on the distance to the region over the convex hull of
     * `corners`: min over strips of the largest corner distance to that strip
     * (each strip is convex, so its distance function peaks at a corner).
     */
    double hull_distance_bound(std::span<const PlanePoint> corners) const;

private:
    std::size_t strip_index(double lambda) const;

    std::vector<double> levels_;
    std::vector<double> lo_;
    std::vector<double> hi_;
};

/// Shared knobs for the geometric metrics.
struct MetricOptions {
    /// Sampling resolution applied to Analytic numbers.
    int levels = 256;
    /// Covering spacing g of the Hausdorff engine.
    double spacing = 1e-3;
};

/// send(u) as a region. Sampled numbers keep their own nodes; Analytic ones are
/// sampled on LevelGrid(levels).
RegionGeometry sendograph(const FuzzyNumber& u, int levels = MetricOptions{}.levels);

inline double point_region_distance(PlanePoint p, const RegionGeometry& region) {
    return region.distance(p);
}

/// A Hausdorff value certified as value <= true distance <= value + error_bound.
struct HausdorffResult {
    double value = 0.0;
    double error_bound = 0.0;

    double upper() const { return value + error_bound; }
};

/**
 * sup over p in A of d(p, B), or of min(p.lambda, d(p, B)) when `endograph` is
 * set (distance to B united with the axis lambda = 0).
 *
 * Branch-and-bound over trapezoid cells of A: the integrand is 1-Lipschitz, so a
 * cell with centre c and circumradius r is bounded by value(c) + r; cells that
 * cannot beat the best value by more than spacing*sqrt(2)/2 are discarded.
 * Throws NonPositiveSpacing.
 */
HausdorffResult directed_hausdorff(const RegionGeometry& a, const RegionGeometry& b, double spacing,
                                   bool endograph = false);

/// max of both directed terms.
HausdorffResult hausdorff_regions(const RegionGeometry& a, const RegionGeometry& b, double spacing);

/// Hausdorff distance between end(u) and end(v) given their sendographs.
HausdorffResult endograph_hausdorff(const RegionGeometry& a, const RegionGeometry& b,
                                    double spacing);

/**
 * d_inf: max over level probes of the endpoint gaps. Probes are LevelGrid(levels)
 * plus the nodes of any Sampled argument, so the value is exact when both are
 * Sampled and a lower bound otherwise.
 */
double sup_distance(const FuzzyNumber& u, const FuzzyNumber& v, int levels = MetricOptions{}.levels);

/// Hausdorff distance of the lambda-levels: max(|lo gap|, |hi gap|).
double level_hausdorff(const FuzzyNumber& u, const FuzzyNumber& v, double lambda);

HausdorffResult sendograph_distance(const FuzzyNumber& u, const FuzzyNumber& v,
                                    const MetricOptions& options = {});
HausdorffResult endograph_distance(const FuzzyNumber& u, const FuzzyNumber& v,
                                   const MetricOptions& options = {});

/**
 * Distance under `metric` as a certified pair. sup and level are computed
 * without geometry (error_bound 0); `lambda` is used only by Metric::level.
 */
HausdorffResult distance(Metric metric, const FuzzyNumber& u, const FuzzyNumber& v,
                         const MetricOptions& options = {}, double lambda = 1.0);

/**
 * Membership of g in the level neighbourhood V(f, levels, eps): true iff the
 * largest level Hausdorff gap over xs and the given levels is below eps.
 * Throws DomainError for eps <= 0 or levels outside [0,1].
 */
bool level_neighborhood_check(const FuzzyFunction& f, const FuzzyFunction& g,
                              std::span<const double> levels, double eps,
                              std::span<const double> xs);

}  // namespace fuzzynn
