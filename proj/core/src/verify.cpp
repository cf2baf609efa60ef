#include "fuzzynn/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>

#include "fuzzynn/errors.hpp"
#include "fuzzynn/nn_operator.hpp"

namespace fuzzynn {

namespace {

// Floating-point allowance for the exact (non-sampled) sides of an inequality.
constexpr double kRoundoff = 1e-12;
// Geometric membership tolerance for endograph points.
constexpr double kMembership = 1e-9;

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Convex weight with both ends of [0,1] drawn explicitly now and then.
double convex_weight(std::mt19937_64& rng) {
    const double pick = uniform(rng, 0.0, 1.0);
    if (pick < 0.1) return 0.0;
    if (pick < 0.2) return 1.0;
    return uniform(rng, 0.0, 1.0);
}

FuzzyNumber mix(double alpha, const FuzzyNumber& u, const FuzzyNumber& v) {
    const std::array<double, 2> c{alpha, 1.0 - alpha};
    const std::array<FuzzyNumber, 2> t{u, v};
    return convex_combine(c, t);
}

// Runs `trial(rng, slacks)` for every trial; slacks[i] feeds reports[i].
template <class Trial>
std::vector<PropertyReport> run_trials(std::vector<std::string> ids, const VerifyConfig& config,
                                       Trial trial) {
    std::vector<PropertyReport> reports;
    for (auto& id : ids) reports.push_back({std::move(id), config.trials, -std::numeric_limits<double>::infinity(), config.seed});
    std::vector<double> slacks(reports.size());
    for (long t = 0; t < config.trials; ++t) {
        auto rng = trial_rng(config.seed, static_cast<std::uint64_t>(t));
        std::fill(slacks.begin(), slacks.end(), -std::numeric_limits<double>::infinity());
        trial(rng, std::span<double>(slacks));
        for (std::size_t i = 0; i < reports.size(); ++i) reports[i].observe(slacks[i]);
    }
    return reports;
}

double hypot_sq(double a, double b) { return a * a + b * b; }

// Random point of end(u): on the axis lambda = 0 a quarter of the time,
// otherwise in send(u).
PlanePoint endograph_point(std::mt19937_64& rng, const FuzzyNumber& u, double bound) {
    if (uniform(rng, 0.0, 1.0) < 0.25) return {uniform(rng, -3.0 * bound, 3.0 * bound), 0.0};
    const double lambda = uniform(rng, 0.0, 1.0);
    const Interval I = u.level(lambda);
    const double k = uniform(rng, 0.0, 1.0);
    return {k * I.lo + (1.0 - k) * I.hi, lambda};
}

double endograph_miss(const RegionGeometry& send, PlanePoint p) {
    if (p.lambda == 0.0) return -kMembership;
    return send.distance(p) - kMembership;
}

}  // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

FuzzyNumber gen_fuzzy(std::mt19937_64& rng, int levels, double bound) {
    if (levels < 0) throw DomainError("random fuzzy number needs levels >= 0");
    if (!(bound > 0.0)) throw DomainError("random fuzzy number needs a positive bound");
    if (levels == 0) {
        double a = uniform(rng, -bound, bound);
        double b = uniform(rng, -bound, bound);
        if (a > b) std::swap(a, b);
        return FuzzyNumber::from_levels(std::vector<double>{a, a}, std::vector<double>{b, b});
    }
    const auto count = static_cast<std::size_t>(levels) + 1;
    std::vector<double> draws(2 * count);
    for (double& d : draws) d = uniform(rng, -bound, bound);
    std::sort(draws.begin(), draws.end());
    std::vector<double> lo(draws.begin(), draws.begin() + static_cast<std::ptrdiff_t>(count));
    std::vector<double> hi(draws.rbegin(), draws.rbegin() + static_cast<std::ptrdiff_t>(count));
    return FuzzyNumber::from_levels(std::move(lo), std::move(hi));
}

FuzzyNumber gen_fuzzy(const RandomFuzzySpec& spec) {
    std::mt19937_64 rng(spec.seed);
    return gen_fuzzy(rng, spec.levels, spec.bound);
}

std::string format_report(const PropertyReport& report) {
    char slack[64];
    std::snprintf(slack, sizeof slack, "%.17g", report.worst_slack);
    return report.id + "," + std::to_string(report.trials) + "," + slack + "," +
           std::to_string(report.seed) + "," + (report.passed() ? "PASS" : "FAIL");
}

std::vector<PropertyReport> run_sigmoid_class(int probe_points) {
    std::vector<PropertyReport> out;
    for (const auto& sigma : {ramp(1.0), heaviside(1.0), smooth_ramp(1.0), ramp(2.5)}) {
        const ClassReport report = check_class_A(sigma, probe_points);
        for (const auto& item : report.items) {
            char m[32];
            std::snprintf(m, sizeof m, "(m=%g).", sigma.m());
            PropertyReport r{"sigmoid-class." + sigma.name() + m + item.name,
                             probe_points, -std::numeric_limits<double>::infinity(), 0};
            r.observe(item.worst_violation - (item.name == "phi_partition" ? 1e-12 : 0.0));
            out.push_back(std::move(r));
        }
    }
    return out;
}

PropertyReport run_plane_inequality(const VerifyConfig& config) {
    const double M = config.bound;
    auto reports = run_trials({"plane-inequality"}, config, [M](std::mt19937_64& rng, std::span<double> slack) {
        const double b = uniform(rng, -M, M);
        const double k1 = uniform(rng, -M, M);
        const double k2 = uniform(rng, -M, M);
        const double alpha = uniform(rng, 0.0, 1.0);
        const double y1 = uniform(rng, -M, M);
        const double y2 = uniform(rng, -M, M);
        const PlanePoint target{alpha * y1 + (1.0 - alpha) * y2, std::min(k1, k2)};

        // Single reference point.
        const double x = uniform(rng, -M, M);
        const double lhs1 = plane_distance({x, b}, target);
        const double rhs1 = std::sqrt(hypot_sq(x - y1, b - k1) + hypot_sq(x - y2, b - k2));
        // Reference point itself a convex combination.
        const double x1 = uniform(rng, -M, M);
        const double x2 = uniform(rng, -M, M);
        const double lhs2 = plane_distance({alpha * x1 + (1.0 - alpha) * x2, b}, target);
        const double rhs2 = std::sqrt(hypot_sq(x1 - y1, b - k1) + hypot_sq(x2 - y2, b - k2));

        slack[0] = std::max(lhs1 - rhs1, lhs2 - rhs2) - kRoundoff;
    });
    return reports.front();
}

std::vector<PropertyReport> run_metric_properties(Metric metric, const VerifyConfig& config) {
    if (metric != Metric::sendograph && metric != Metric::endograph) {
        throw DomainError("metric properties are defined for sendograph and endograph");
    }
    const bool endo = metric == Metric::endograph;
    const std::string prefix = endo ? "endograph-bounds." : "sendograph-bounds.";
    std::vector<std::string> ids{prefix + "scaling", prefix + "subadditive", prefix + "convex-sqrt2-max"};
    if (endo) ids.push_back(prefix + "convex-root-sum-square");

    const MetricOptions options{config.levels, config.spacing};
    auto D = [&](const FuzzyNumber& u, const FuzzyNumber& v) { return distance(metric, u, v, options); };

    return run_trials(std::move(ids), config, [&](std::mt19937_64& rng, std::span<double> slack) {
        const FuzzyNumber u = gen_fuzzy(rng, config.levels, config.bound);
        const FuzzyNumber v = gen_fuzzy(rng, config.levels, config.bound);
        const FuzzyNumber w = gen_fuzzy(rng, config.levels, config.bound);

        // D(a u, b u) <= |a - b| max |z| over the support.
        const double a = uniform(rng, -2.0, 2.0);
        const double b = uniform(rng, 0.0, 1.0) < 0.1 ? a : uniform(rng, -2.0, 2.0);
        slack[0] = D(scale(a, u), scale(b, u)).value - std::abs(a - b) * support_bound(u) - kRoundoff;

        // D(sum u_j, sum v_j) <= sum D(u_j, v_j).
        const int terms = 1 + static_cast<int>(rng() % 3);
        std::vector<FuzzyNumber> us;
        std::vector<FuzzyNumber> vs;
        double rhs = 0.0;
        for (int j = 0; j < terms; ++j) {
            us.push_back(gen_fuzzy(rng, config.levels, config.bound));
            vs.push_back(gen_fuzzy(rng, config.levels, config.bound));
            rhs += D(us.back(), vs.back()).upper();
        }
        const std::vector<double> ones(static_cast<std::size_t>(terms), 1.0);
        slack[1] = D(convex_combine(ones, us), convex_combine(ones, vs)).value - rhs - kRoundoff;

        // D(a u + (1-a) v, w) against D(u, w) and D(v, w).
        const double alpha = convex_weight(rng);
        const double lhs = D(mix(alpha, u, v), w).value;
        const double du = D(u, w).upper();
        const double dv = D(v, w).upper();
        slack[2] = lhs - std::sqrt(2.0) * std::max(du, dv) - kRoundoff;
        if (endo) slack[3] = lhs - std::sqrt(du * du + dv * dv) - kRoundoff;
    });
}

std::vector<PropertyReport> run_metric_axioms(Metric metric, const VerifyConfig& config) {
    if (metric == Metric::level) throw DomainError("metric axioms need a metric, not the level topology");
    const std::string prefix = "metric-axioms." + std::string(to_string(metric)) + ".";
    const MetricOptions options{config.levels, config.spacing};
    auto D = [&](const FuzzyNumber& u, const FuzzyNumber& v) { return distance(metric, u, v, options); };

    return run_trials({prefix + "identity", prefix + "separation", prefix + "symmetry", prefix + "triangle"},
                      config, [&](std::mt19937_64& rng, std::span<double> slack) {
                          const FuzzyNumber u = gen_fuzzy(rng, config.levels, config.bound);
                          const FuzzyNumber v = gen_fuzzy(rng, config.levels, config.bound);
                          const FuzzyNumber w = gen_fuzzy(rng, config.levels, config.bound);
                          const auto uv = D(u, v);
                          const auto vu = D(v, u);
                          slack[0] = D(u, u).value - kRoundoff;
                          slack[1] = uv.value > 0.0 ? -uv.value : 1.0;
                          slack[2] = std::abs(uv.value - vu.value) - uv.error_bound - vu.error_bound - kRoundoff;
                          slack[3] = D(u, w).value - uv.upper() - D(v, w).upper() - kRoundoff;
                      });
}

PropertyReport run_ordering(const VerifyConfig& config) {
    const MetricOptions options{config.levels, config.spacing};
    auto reports = run_trials({"ordering.endograph-le-sendograph"}, config,
                              [&](std::mt19937_64& rng, std::span<double> slack) {
                                  const FuzzyNumber u = gen_fuzzy(rng, config.levels, config.bound);
                                  const FuzzyNumber v = gen_fuzzy(rng, config.levels, config.bound);
                                  const auto de = endograph_distance(u, v, options);
                                  const auto ds = sendograph_distance(u, v, options);
                                  slack[0] = de.value - ds.value - de.error_bound - ds.error_bound - kRoundoff;
                              });
    return reports.front();
}

PropertyReport run_convex_levels(const VerifyConfig& config) {
    auto reports = run_trials({"convex-levels"}, config, [&](std::mt19937_64& rng, std::span<double> slack) {
        const FuzzyNumber u = gen_fuzzy(rng, config.levels, config.bound);
        const FuzzyNumber v = gen_fuzzy(rng, config.levels, config.bound);
        const double alpha = convex_weight(rng);
        const double lambda = uniform(rng, 0.0, 1.0);
        const Interval W = mix(alpha, u, v).level(lambda);
        const Interval U = u.level(lambda);
        const Interval V = v.level(lambda);

        // z in W decomposes through the same convex position in U and V.
        const double k = uniform(rng, 0.0, 1.0);
        const double z = k * W.lo + (1.0 - k) * W.hi;
        const double x = k * U.lo + (1.0 - k) * U.hi;
        const double y = k * V.lo + (1.0 - k) * V.hi;
        const double tol = kRoundoff * (1.0 + std::abs(z));
        double worst = std::abs(alpha * x + (1.0 - alpha) * y - z) - tol;
        worst = std::max({worst, U.lo - x - tol, x - U.hi - tol, V.lo - y - tol, y - V.hi - tol});

        // Conversely a combination of level points lands in W.
        const double x2 = uniform(rng, U.lo, U.hi);
        const double y2 = uniform(rng, V.lo, V.hi);
        const double z2 = alpha * x2 + (1.0 - alpha) * y2;
        worst = std::max({worst, W.lo - z2 - tol, z2 - W.hi - tol});
        slack[0] = worst;
    });
    return reports.front();
}

std::vector<PropertyReport> run_endograph_membership(const VerifyConfig& config) {
    return run_trials({"endograph-membership.same", "endograph-membership.combined"}, config,
                      [&](std::mt19937_64& rng, std::span<double> slack) {
                          const FuzzyNumber u = gen_fuzzy(rng, config.levels, config.bound);
                          const FuzzyNumber v = gen_fuzzy(rng, config.levels, config.bound);
                          const double alpha = convex_weight(rng);
                          const RegionGeometry su = sendograph(u);
                          const RegionGeometry sw = sendograph(mix(alpha, u, v));

                          const PlanePoint p1 = endograph_point(rng, u, config.bound);
                          const PlanePoint p2 = endograph_point(rng, u, config.bound);
                          slack[0] = endograph_miss(
                              su, {alpha * p1.x + (1.0 - alpha) * p2.x, std::min(p1.lambda, p2.lambda)});

                          const PlanePoint q1 = endograph_point(rng, u, config.bound);
                          const PlanePoint q2 = endograph_point(rng, v, config.bound);
                          slack[1] = endograph_miss(
                              sw, {alpha * q1.x + (1.0 - alpha) * q2.x, std::min(q1.lambda, q2.lambda)});
                      });
}

HausdorffResult measure_sup_error(const FuzzyFunction& f, const SigmoidalFunction& sigma, int n,
                                  Metric metric, std::span<const double> xs,
                                  const MetricOptions& options, double lambda) {
    const Approximant approx(f, NodeGrid(f.a(), f.b(), n), sigma);
    HausdorffResult worst{0.0, 0.0};
    for (double x : xs) {
        if (metric == Metric::level) {
            const Interval s = approx.level(x, lambda);
            const Interval t = f(x).level(lambda);
            worst.value = std::max({worst.value, std::abs(s.lo - t.lo), std::abs(s.hi - t.hi)});
            continue;
        }
        const HausdorffResult d = distance(metric, approx(x), f(x), options, lambda);
        worst.value = std::max(worst.value, d.value);
        worst.error_bound = std::max(worst.error_bound, d.error_bound);
    }
    return worst;
}

std::vector<PropertyReport> run_jackson_suite(const CorpusEntry& entry, const SigmoidalFunction& sigma,
                                              std::span<const int> ns, Metric theorem,
                                              const JacksonOptions& options) {
    const FuzzyFunction& f = entry.function;
    if (!f.has_analytic_modulus(theorem)) {
        throw MissingAnalyticModulus("entry '" + entry.id + "' has no closed-form " +
                                     std::string(to_string(theorem)) + " modulus");
    }
    const auto& omega = f.analytic_modulus(theorem);
    const bool geometric = theorem == Metric::sendograph || theorem == Metric::endograph;
    const double factor = geometric ? std::sqrt(2.0) : 1.0;
    const auto xs = linspace(f.a(), f.b(), static_cast<std::size_t>(geometric ? options.geometric_probes : options.probes));
    const std::vector<double> levels =
        theorem == Metric::level ? options.levels : std::vector<double>{1.0};
    const std::string prefix = "jackson." + std::string(to_string(theorem)) + "." + entry.id + "." + sigma.name();

    std::vector<PropertyReport> out;
    for (double lambda : levels) {
        char tag[64];
        std::snprintf(tag, sizeof tag, ".lambda=%g", lambda);
        PropertyReport report{prefix + (theorem == Metric::level ? tag : ""), static_cast<long>(ns.size()),
                              -std::numeric_limits<double>::infinity(), 0};
        for (int n : ns) {
            const double h = (f.b() - f.a()) / n;
            const double bound = factor * omega(h, lambda);
            const HausdorffResult err = measure_sup_error(f, sigma, n, theorem, xs, options.metric, lambda);
            report.observe(err.value - bound - err.error_bound);
        }
        out.push_back(std::move(report));
    }

    if (options.target > 0.0 && f.is_continuous(theorem)) {
        PropertyReport corollary{prefix + ".within-target", 1, -std::numeric_limits<double>::infinity(), 0};
        int chosen = 0;
        for (int n = 1; n <= (1 << 20); n *= 2) {
            double worst_bound = 0.0;
            for (double lambda : levels) worst_bound = std::max(worst_bound, factor * omega((f.b() - f.a()) / n, lambda));
            if (worst_bound < options.target) {
                chosen = n;
                break;
            }
        }
        if (chosen == 0) {
            corollary.observe(std::numeric_limits<double>::infinity());
        } else if (theorem == Metric::level) {
            const Approximant approx(f, NodeGrid(f.a(), f.b(), chosen), sigma);
            const bool inside = level_neighborhood_check(f, approx.as_function(), levels, options.target, xs);
            double worst = 0.0;
            for (double lambda : levels) {
                worst = std::max(worst, measure_sup_error(f, sigma, chosen, theorem, xs, options.metric, lambda).value);
            }
            corollary.observe(inside ? worst - options.target : std::max(worst - options.target, 0.0) + 1e-300);
        } else {
            const HausdorffResult err = measure_sup_error(f, sigma, chosen, theorem, xs, options.metric);
            corollary.observe(err.value - options.target);
        }
        out.push_back(std::move(corollary));
    }
    return out;
}

}  // namespace fuzzynn
