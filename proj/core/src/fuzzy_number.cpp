#include "fuzzynn/fuzzy_number.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <variant>

#include "fuzzynn/errors.hpp"

namespace fuzzynn {

namespace {

// Mixed-resolution Sampled arithmetic stays Sampled up to this many steps.
constexpr long kMaxCommonResolution = 1L << 16;

struct Analytic {
    FuzzyNumber::LevelFunction level;
};

struct Sampled {
    LevelGrid grid;
    std::vector<double> lo;
    std::vector<double> hi;
};

void check_lambda(double lambda) {
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw DomainError("level " + std::to_string(lambda) + " outside [0,1]");
    }
}

Interval interpolate(const Sampled& s, double lambda) {
    const int L = s.grid.resolution();
    if (lambda >= 1.0) return {s.lo.back(), s.hi.back()};
    const double pos = lambda * L;
    const auto i = std::min(static_cast<std::size_t>(pos), static_cast<std::size_t>(L - 1));
    const double frac = pos - static_cast<double>(i);
    if (frac == 0.0) return {s.lo[i], s.hi[i]};
    return {s.lo[i] + frac * (s.lo[i + 1] - s.lo[i]), s.hi[i] + frac * (s.hi[i + 1] - s.hi[i])};
}

// Checks monotone endpoints on consecutive probes and the final crossing.
void validate_nodes(std::span<const double> lo, std::span<const double> hi) {
    constexpr double tol = FuzzyNumber::kTolerance;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (!std::isfinite(lo[i]) || !std::isfinite(hi[i])) {
            throw DomainError("non-finite endpoint at node " + std::to_string(i), i);
        }
    }
    for (std::size_t i = 1; i < lo.size(); ++i) {
        if (lo[i] < lo[i - 1] - tol) {
            throw MonotonicityViolation("lower endpoint decreases at node " + std::to_string(i));
        }
        if (hi[i] > hi[i - 1] + tol) {
            throw MonotonicityViolation("upper endpoint increases at node " + std::to_string(i));
        }
    }
    if (lo.back() > hi.back() + tol) {
        throw CrossingViolation("lo(1) > hi(1)");
    }
}

}  // namespace

struct FuzzyNumber::Payload {
    std::variant<Analytic, Sampled> rep;
};

LevelGrid::LevelGrid(int resolution) : resolution_(resolution) {
    if (resolution < 1) {
        throw DomainError("level grid resolution must be positive");
    }
}

FuzzyNumber FuzzyNumber::analytic_unchecked(LevelFunction level) {
    return FuzzyNumber(std::make_shared<const Payload>(Payload{Analytic{std::move(level)}}));
}

FuzzyNumber FuzzyNumber::sampled_unchecked(std::vector<double> lo, std::vector<double> hi) {
    LevelGrid grid(static_cast<int>(lo.size()) - 1);
    return FuzzyNumber(
        std::make_shared<const Payload>(Payload{Sampled{grid, std::move(lo), std::move(hi)}}));
}

FuzzyNumber FuzzyNumber::from_levels(Endpoint lo, Endpoint hi) {
    if (!lo || !hi) throw DomainError("endpoint function is empty");
    std::vector<double> plo(kProbeLevels + 1);
    std::vector<double> phi(kProbeLevels + 1);
    const LevelGrid probe(kProbeLevels);
    for (std::size_t i = 0; i < probe.size(); ++i) {
        plo[i] = lo(probe.level(i));
        phi[i] = hi(probe.level(i));
    }
    validate_nodes(plo, phi);
    return analytic_unchecked([lo = std::move(lo), hi = std::move(hi)](double lambda) {
        return Interval{lo(lambda), hi(lambda)};
    });
}

FuzzyNumber FuzzyNumber::from_levels(std::vector<double> lo, std::vector<double> hi) {
    if (lo.size() != hi.size()) throw DomainError("endpoint arrays differ in length");
    if (lo.size() < 2) throw DomainError("a sampled number needs at least two levels");
    validate_nodes(lo, hi);
    return sampled_unchecked(std::move(lo), std::move(hi));
}

FuzzyNumber FuzzyNumber::crisp(double x) {
    if (!std::isfinite(x)) throw DomainError("crisp value must be finite");
    return sampled_unchecked({x, x}, {x, x});
}

FuzzyNumber FuzzyNumber::triangular(double a, double b, double c) {
    return from_levels(std::vector<double>{a, b}, std::vector<double>{c, b});
}

Interval FuzzyNumber::level(double lambda) const {
    check_lambda(lambda);
    return std::visit(
        [lambda](const auto& rep) -> Interval {
            using T = std::decay_t<decltype(rep)>;
            if constexpr (std::is_same_v<T, Analytic>) {
                return rep.level(lambda);
            } else {
                return interpolate(rep, lambda);
            }
        },
        payload_->rep);
}

bool FuzzyNumber::is_sampled() const { return std::holds_alternative<Sampled>(payload_->rep); }

std::optional<LevelGrid> FuzzyNumber::grid() const {
    if (const auto* s = std::get_if<Sampled>(&payload_->rep)) return s->grid;
    return std::nullopt;
}

std::span<const double> FuzzyNumber::lower_nodes() const {
    if (const auto* s = std::get_if<Sampled>(&payload_->rep)) return s->lo;
    return {};
}

std::span<const double> FuzzyNumber::upper_nodes() const {
    if (const auto* s = std::get_if<Sampled>(&payload_->rep)) return s->hi;
    return {};
}

FuzzyNumber FuzzyNumber::sample(int levels) const {
    const LevelGrid grid(levels);
    if (const auto* s = std::get_if<Sampled>(&payload_->rep); s && s->grid == grid) return *this;
    std::vector<double> lo(grid.size());
    std::vector<double> hi(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Interval I = level(grid.level(i));
        lo[i] = I.lo;
        hi[i] = I.hi;
    }
    validate_nodes(lo, hi);
    return sampled_unchecked(std::move(lo), std::move(hi));
}

namespace {

// Common Sampled resolution for a set of numbers, or 0 if any is Analytic or
// the least common multiple grows too large.
int common_resolution(std::span<const FuzzyNumber> values) {
    long res = 1;
    for (const auto& v : values) {
        const auto g = v.grid();
        if (!g) return 0;
        res = std::lcm(res, static_cast<long>(g->resolution()));
        if (res > kMaxCommonResolution) return 0;
    }
    return static_cast<int>(res);
}

}  // namespace

FuzzyNumber convex_combine(std::span<const double> coeffs, std::span<const FuzzyNumber> values) {
    if (coeffs.size() != values.size()) throw DomainError("coefficient/value count mismatch");
    if (coeffs.empty()) throw DomainError("convex_combine needs at least one term");
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (!(coeffs[i] >= 0.0)) {
            throw NegativeCoefficient("coefficient " + std::to_string(i) + " is negative");
        }
    }

    if (const int L = common_resolution(values); L > 0) {
        const LevelGrid grid(L);
        std::vector<double> lo(grid.size(), 0.0);
        std::vector<double> hi(grid.size(), 0.0);
        for (std::size_t j = 0; j < values.size(); ++j) {
            const auto own = values[j].grid()->resolution();
            const auto vlo = values[j].lower_nodes();
            const auto vhi = values[j].upper_nodes();
            if (own == L) {
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    lo[i] += coeffs[j] * vlo[i];
                    hi[i] += coeffs[j] * vhi[i];
                }
            } else {
                for (std::size_t i = 0; i < grid.size(); ++i) {
                    const Interval I = values[j].level(grid.level(i));
                    lo[i] += coeffs[j] * I.lo;
                    hi[i] += coeffs[j] * I.hi;
                }
            }
        }
        return FuzzyNumber::sampled_unchecked(std::move(lo), std::move(hi));
    }

    std::vector<double> c(coeffs.begin(), coeffs.end());
    std::vector<FuzzyNumber> v(values.begin(), values.end());
    return FuzzyNumber::analytic_unchecked([c = std::move(c), v = std::move(v)](double lambda) {
        Interval out{0.0, 0.0};
        for (std::size_t j = 0; j < v.size(); ++j) {
            const Interval I = v[j].level(lambda);
            out.lo += c[j] * I.lo;
            out.hi += c[j] * I.hi;
        }
        return out;
    });
}

FuzzyNumber add(const FuzzyNumber& u, const FuzzyNumber& v) {
    const double ones[] = {1.0, 1.0};
    const FuzzyNumber terms[] = {u, v};
    return convex_combine(ones, terms);
}

FuzzyNumber scale(double alpha, const FuzzyNumber& u) {
    if (!std::isfinite(alpha)) throw DomainError("scale factor must be finite");
    if (alpha == 0.0) return FuzzyNumber::crisp(0.0);
    if (u.is_sampled()) {
        const auto lo = u.lower_nodes();
        const auto hi = u.upper_nodes();
        std::vector<double> nlo(lo.size());
        std::vector<double> nhi(hi.size());
        for (std::size_t i = 0; i < lo.size(); ++i) {
            nlo[i] = alpha > 0 ? alpha * lo[i] : alpha * hi[i];
            nhi[i] = alpha > 0 ? alpha * hi[i] : alpha * lo[i];
        }
        return FuzzyNumber::sampled_unchecked(std::move(nlo), std::move(nhi));
    }
    return FuzzyNumber::analytic_unchecked([alpha, u](double lambda) {
        const Interval I = u.level(lambda);
        return alpha > 0 ? Interval{alpha * I.lo, alpha * I.hi} : Interval{alpha * I.hi, alpha * I.lo};
    });
}

double support_bound(const FuzzyNumber& u) {
    const Interval s = u.support();
    return std::max(std::abs(s.lo), std::abs(s.hi));
}

}  // namespace fuzzynn
