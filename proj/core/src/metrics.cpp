#include "fuzzynn/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "fuzzynn/errors.hpp"

namespace fuzzynn {

double plane_distance(PlanePoint p, PlanePoint q) { return std::hypot(p.x - q.x, p.lambda - q.lambda); }

double point_segment_distance(PlanePoint p, PlanePoint a, PlanePoint b) {
    const double dx = b.x - a.x;
    const double dl = b.lambda - a.lambda;
    const double len2 = dx * dx + dl * dl;
    if (len2 == 0.0) return plane_distance(p, a);
    const double t = std::clamp(((p.x - a.x) * dx + (p.lambda - a.lambda) * dl) / len2, 0.0, 1.0);
    return plane_distance(p, {a.x + t * dx, a.lambda + t * dl});
}

namespace {

bool collinear(double l0, double x0, double l1, double x1, double l2, double x2) {
    const double cross = (x1 - x0) * (l2 - l0) - (x2 - x0) * (l1 - l0);
    const double scale = std::max({1.0, std::abs(x0), std::abs(x1), std::abs(x2)});
    return std::abs(cross) <= 1e-13 * scale;
}

}  // namespace

RegionGeometry::RegionGeometry(std::vector<double> levels, std::vector<double> lo, std::vector<double> hi) {
    if (levels.size() < 2 || lo.size() != levels.size() || hi.size() != levels.size()) {
        throw DomainError("region needs matching arrays of at least two levels");
    }
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (i > 0 && !(levels[i] > levels[i - 1])) throw DomainError("region levels must increase");
        if (!(lo[i] <= hi[i])) throw DomainError("region slice is empty at node " + std::to_string(i));
    }

    levels_.push_back(levels[0]);
    lo_.push_back(lo[0]);
    hi_.push_back(hi[0]);
    for (std::size_t i = 1; i + 1 < levels.size(); ++i) {
        const double lp = levels_.back();
        const bool drop = collinear(lp, lo_.back(), levels[i], lo[i], levels[i + 1], lo[i + 1]) &&
                          collinear(lp, hi_.back(), levels[i], hi[i], levels[i + 1], hi[i + 1]);
        if (!drop) {
            levels_.push_back(levels[i]);
            lo_.push_back(lo[i]);
            hi_.push_back(hi[i]);
        }
    }
    levels_.push_back(levels.back());
    lo_.push_back(lo.back());
    hi_.push_back(hi.back());
}

Strip RegionGeometry::strip(std::size_t i) const {
    return {levels_[i], lo_[i], hi_[i], levels_[i + 1], lo_[i + 1], hi_[i + 1]};
}

std::vector<Strip> RegionGeometry::strips() const {
    std::vector<Strip> out;
    out.reserve(strip_count());
    for (std::size_t i = 0; i < strip_count(); ++i) out.push_back(strip(i));
    return out;
}

std::vector<PlanePoint> RegionGeometry::boundary() const {
    std::vector<PlanePoint> out;
    out.reserve(2 * levels_.size() + 1);
    out.push_back({lo_.front(), levels_.front()});
    for (std::size_t i = 0; i < levels_.size(); ++i) out.push_back({hi_[i], levels_[i]});
    for (std::size_t i = levels_.size(); i-- > 0;) out.push_back({lo_[i], levels_[i]});
    return out;
}

std::size_t RegionGeometry::strip_index(double lambda) const {
    const auto it = std::upper_bound(levels_.begin(), levels_.end(), lambda);
    const auto pos = static_cast<std::size_t>(std::distance(levels_.begin(), it));
    return std::clamp<std::size_t>(pos == 0 ? 0 : pos - 1, 0, strip_count() - 1);
}

Interval RegionGeometry::slice(double lambda) const {
    const std::size_t i = strip_index(lambda);
    const double span = levels_[i + 1] - levels_[i];
    const double t = std::clamp((lambda - levels_[i]) / span, 0.0, 1.0);
    if (t == 1.0) return {lo_[i + 1], hi_[i + 1]};
    return {lo_[i] + t * (lo_[i + 1] - lo_[i]), hi_[i] + t * (hi_[i + 1] - hi_[i])};
}

bool RegionGeometry::contains(PlanePoint p) const {
    if (!(p.lambda >= levels_.front() && p.lambda <= levels_.back())) return false;
    return slice(p.lambda).contains(p.x);
}

double RegionGeometry::distance(PlanePoint p) const {
    if (contains(p)) return 0.0;
    const std::size_t last = levels_.size() - 1;
    double best = std::min(point_segment_distance(p, {lo_[0], levels_[0]}, {hi_[0], levels_[0]}),
                           point_segment_distance(p, {lo_[last], levels_[last]}, {hi_[last], levels_[last]}));
    auto visit = [&](std::size_t i) {
        best = std::min(best, point_segment_distance(p, {lo_[i], levels_[i]}, {lo_[i + 1], levels_[i + 1]}));
        best = std::min(best, point_segment_distance(p, {hi_[i], levels_[i]}, {hi_[i + 1], levels_[i + 1]}));
    };
    // Walk outward from the strip at p's level; a strip whose level range is
    // already farther than `best` cannot improve it.
    const std::size_t start = strip_index(p.lambda);
    for (std::size_t i = start + 1; i-- > 0;) {
        if (p.lambda - levels_[i + 1] >= best) break;
        visit(i);
    }
    for (std::size_t i = start + 1; i < strip_count(); ++i) {
        if (levels_[i] - p.lambda >= best) break;
        visit(i);
    }
    return best;
}

double RegionGeometry::strip_distance(std::size_t i, PlanePoint p) const {
    const double l0 = levels_[i];
    const double l1 = levels_[i + 1];
    if (p.lambda >= l0 && p.lambda <= l1) {
        const double t = (p.lambda - l0) / (l1 - l0);
        const double a = lo_[i] + t * (lo_[i + 1] - lo_[i]);
        const double b = hi_[i] + t * (hi_[i + 1] - hi_[i]);
        if (p.x >= a && p.x <= b) return 0.0;
    }
    return std::min({point_segment_distance(p, {lo_[i], l0}, {hi_[i], l0}),
                     point_segment_distance(p, {lo_[i + 1], l1}, {hi_[i + 1], l1}),
                     point_segment_distance(p, {lo_[i], l0}, {lo_[i + 1], l1}),
                     point_segment_distance(p, {hi_[i], l0}, {hi_[i + 1], l1})});
}

double RegionGeometry::hull_distance_bound(std::span<const PlanePoint> corners) const {
    double lmin = std::numeric_limits<double>::infinity();
    double lmax = -lmin;
    for (const PlanePoint& c : corners) {
        lmin = std::min(lmin, c.lambda);
        lmax = std::max(lmax, c.lambda);
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < strip_count(); ++i) {
        const double gap = std::max({levels_[i] - lmax, lmin - levels_[i + 1], 0.0});
        if (gap >= best) continue;
        double worst = 0.0;
        for (const PlanePoint& c : corners) {
            worst = std::max(worst, strip_distance(i, c));
            if (worst >= best) break;
        }
        best = std::min(best, worst);
        if (best == 0.0) break;
    }
    return best;
}

RegionGeometry sendograph(const FuzzyNumber& u, int levels) {
    const FuzzyNumber s = u.is_sampled() ? u : u.sample(levels);
    const LevelGrid grid = *s.grid();
    std::vector<double> lv(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) lv[i] = grid.level(i);
    const auto lo = s.lower_nodes();
    const auto hi = s.upper_nodes();
    return RegionGeometry(std::move(lv), {lo.begin(), lo.end()}, {hi.begin(), hi.end()});
}

namespace {

// Trapezoid with horizontal bottom [a0,b0] at l0 and top [a1,b1] at l1.
struct Cell {
    double l0, a0, b0;
    double l1, a1, b1;
    double upper;  // bound on the integrand over the cell

    PlanePoint centre() const { return {(a0 + b0 + a1 + b1) / 4.0, (l0 + l1) / 2.0}; }

    double radius() const {
        const PlanePoint c = centre();
        return std::max({plane_distance(c, {a0, l0}), plane_distance(c, {b0, l0}),
                         plane_distance(c, {a1, l1}), plane_distance(c, {b1, l1})});
    }

    bool operator<(const Cell& other) const { return upper < other.upper; }
};

}  // namespace

HausdorffResult directed_hausdorff(const RegionGeometry& a, const RegionGeometry& b, double spacing,
                                   bool endograph) {
    if (!(spacing > 0.0) || !std::isfinite(spacing)) {
        throw NonPositiveSpacing("Hausdorff spacing must be positive");
    }
    const double tolerance = spacing * std::sqrt(2.0) / 2.0;
    auto value = [&](PlanePoint p) {
        const double d = b.distance(p);
        return endograph ? std::min(p.lambda, d) : d;
    };

    double best = 0.0;
    for (const PlanePoint& p : a.boundary()) best = std::max(best, value(p));

    std::priority_queue<Cell> queue;
    auto push = [&](Cell cell) {
        const PlanePoint c = cell.centre();
        const double v = value(c);
        best = std::max(best, v);
        const std::array<PlanePoint, 4> corners{
            PlanePoint{cell.a0, cell.l0}, {cell.b0, cell.l0}, {cell.a1, cell.l1}, {cell.b1, cell.l1}};
        cell.upper = std::min(v + cell.radius(), b.hull_distance_bound(corners));
        if (endograph) cell.upper = std::min(cell.upper, cell.l1);
        if (cell.upper > best + tolerance) queue.push(cell);
    };

    for (const Strip& s : a.strips()) push({s.lambda0, s.lo0, s.hi0, s.lambda1, s.lo1, s.hi1, 0.0});

    while (!queue.empty()) {
        const Cell cell = queue.top();
        queue.pop();
        if (cell.upper <= best + tolerance) break;
        const double height = cell.l1 - cell.l0;
        const double width = std::max(cell.b0 - cell.a0, cell.b1 - cell.a1);
        if (height >= width) {
            const double lm = 0.5 * (cell.l0 + cell.l1);
            const double am = 0.5 * (cell.a0 + cell.a1);
            const double bm = 0.5 * (cell.b0 + cell.b1);
            push({cell.l0, cell.a0, cell.b0, lm, am, bm, 0.0});
            push({lm, am, bm, cell.l1, cell.a1, cell.b1, 0.0});
        } else {
            const double m0 = 0.5 * (cell.a0 + cell.b0);
            const double m1 = 0.5 * (cell.a1 + cell.b1);
            push({cell.l0, cell.a0, m0, cell.l1, cell.a1, m1, 0.0});
            push({cell.l0, m0, cell.b0, cell.l1, m1, cell.b1, 0.0});
        }
    }
    return {best, tolerance};
}

HausdorffResult hausdorff_regions(const RegionGeometry& a, const RegionGeometry& b, double spacing) {
    const auto ab = directed_hausdorff(a, b, spacing);
    const auto ba = directed_hausdorff(b, a, spacing);
    return {std::max(ab.value, ba.value), ab.error_bound};
}

HausdorffResult endograph_hausdorff(const RegionGeometry& a, const RegionGeometry& b, double spacing) {
    const auto ab = directed_hausdorff(a, b, spacing, true);
    const auto ba = directed_hausdorff(b, a, spacing, true);
    return {std::max(ab.value, ba.value), ab.error_bound};
}

double sup_distance(const FuzzyNumber& u, const FuzzyNumber& v, int levels) {
    const LevelGrid grid(levels);
    double best = 0.0;
    auto probe = [&](double lambda) { best = std::max(best, level_hausdorff(u, v, lambda)); };
    for (std::size_t i = 0; i < grid.size(); ++i) probe(grid.level(i));
    for (const FuzzyNumber* w : {&u, &v}) {
        if (const auto g = w->grid(); g && !(*g == grid)) {
            for (std::size_t i = 0; i < g->size(); ++i) probe(g->level(i));
        }
    }
    return best;
}

double level_hausdorff(const FuzzyNumber& u, const FuzzyNumber& v, double lambda) {
    const Interval a = u.level(lambda);
    const Interval b = v.level(lambda);
    return std::max(std::abs(a.lo - b.lo), std::abs(a.hi - b.hi));
}

HausdorffResult sendograph_distance(const FuzzyNumber& u, const FuzzyNumber& v, const MetricOptions& options) {
    return hausdorff_regions(sendograph(u, options.levels), sendograph(v, options.levels), options.spacing);
}

HausdorffResult endograph_distance(const FuzzyNumber& u, const FuzzyNumber& v, const MetricOptions& options) {
    return endograph_hausdorff(sendograph(u, options.levels), sendograph(v, options.levels), options.spacing);
}

HausdorffResult distance(Metric metric, const FuzzyNumber& u, const FuzzyNumber& v,
                         const MetricOptions& options, double lambda) {
    switch (metric) {
        case Metric::sup: return {sup_distance(u, v, options.levels), 0.0};
        case Metric::level: return {level_hausdorff(u, v, lambda), 0.0};
        case Metric::sendograph: return sendograph_distance(u, v, options);
        case Metric::endograph: return endograph_distance(u, v, options);
    }
    throw DomainError("unknown metric");
}

bool level_neighborhood_check(const FuzzyFunction& f, const FuzzyFunction& g,
                              std::span<const double> levels, double eps,
                              std::span<const double> xs) {
    if (!(eps > 0.0)) throw DomainError("neighbourhood radius must be positive");
    for (double lambda : levels) {
        if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("neighbourhood level outside [0,1]");
    }
    double worst = 0.0;
    for (double x : xs) {
        const FuzzyNumber fx = f(x);
        const FuzzyNumber gx = g(x);
        for (double lambda : levels) worst = std::max(worst, level_hausdorff(fx, gx, lambda));
    }
    return worst < eps;
}

}  // namespace fuzzynn
