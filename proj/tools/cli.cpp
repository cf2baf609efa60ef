#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "fuzzynn/corpus.hpp"
#include "fuzzynn/errors.hpp"
#include "fuzzynn/metrics.hpp"
#include "fuzzynn/nn_operator.hpp"
#include "fuzzynn/sigmoid.hpp"
#include "fuzzynn/verify.hpp"

namespace fuzzynn::cli {

namespace {

const std::vector<double> kTableLevels{0.50005, 0.6, 0.8};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> table_levels(const RunConfig& cfg) {
    return cfg.lambdas.empty() ? kTableLevels : cfg.lambdas;
}

std::vector<int> default_ns(const RunConfig& cfg) {
    if (!cfg.ns.empty()) return cfg.ns;
    if (cfg.command == "table") {
        if (cfg.sigma == "heaviside" || cfg.sigma == "sigma2") return {10, 50, 100, 1000};
        return {2, 6, 10, 50, 100, 1000};
    }
    return {2, 4, 8, 16, 32, 64, 128, 256};
}

MetricOptions metric_options(const RunConfig& cfg) { return {cfg.levels, cfg.spacing}; }

}  // namespace

void validate(const RunConfig& cfg) {
    if (!(cfg.m > 0.0) || !std::isfinite(cfg.m)) throw NonPositiveM("--m must be positive");
    for (int n : cfg.ns) {
        if (n < 1) throw DomainError("--n values must be >= 1");
    }
    for (double l : cfg.lambdas) {
        if (!(l >= 0.0 && l <= 1.0)) throw DomainError("--lambda values must lie in [0,1]");
    }
    if (cfg.grid < 2) throw DomainError("--grid must be >= 2");
    if (!(cfg.spacing > 0.0) || !std::isfinite(cfg.spacing)) throw NonPositiveSpacing("--spacing must be positive");
    if (cfg.trials < 1) throw DomainError("--trials must be >= 1");
    if (cfg.probes < 2) throw DomainError("--probes must be >= 2");
    if (cfg.levels < 1) throw DomainError("--levels must be >= 1");
    (void)sigmoid_by_name(cfg.sigma, cfg.m);
    if (cfg.command != "verify") {
        const CorpusEntry entry = corpus_by_id(cfg.function);
        if (cfg.command == "table" && entry.id != "level-example") {
            throw UnknownFunction("table is defined for --function level-example only");
        }
        if (cfg.command == "metric") {
            for (double t : {cfg.t1, cfg.t2}) {
                if (!(t >= entry.function.a() && t <= entry.function.b())) {
                    throw DomainError("--t1/--t2 outside the function's domain");
                }
            }
        }
    }
    if (cfg.command == "convergence") (void)parse_metric(cfg.metric);
    const auto known = verify_suite_names();
    for (const auto& s : cfg.suites) {
        if (std::find(known.begin(), known.end(), s) == known.end()) {
            throw DomainError("unknown suite '" + s + "'");
        }
    }
}

int cmd_table(const RunConfig& cfg, std::ostream& out) {
    const CorpusEntry entry = corpus_by_id(cfg.function);
    const FuzzyFunction& f = entry.function;
    const SigmoidalFunction sigma = sigmoid_by_name(cfg.sigma, cfg.m);
    const auto xs = linspace(f.a(), f.b(), static_cast<std::size_t>(cfg.grid));
    const auto levels = table_levels(cfg);

    // Target values do not depend on n.
    std::vector<FuzzyNumber> targets;
    targets.reserve(xs.size());
    for (double x : xs) targets.push_back(f(x));

    out << "sigma,m,n,lambda,max_error\n";
    for (int n : default_ns(cfg)) {
        const Approximant approx(f, NodeGrid(f.a(), f.b(), n), sigma);
        for (double lambda : levels) {
            double worst = 0.0;
            for (std::size_t i = 0; i < xs.size(); ++i) {
                worst = std::max(worst, std::abs(approx.level(xs[i], lambda).lo - targets[i].level(lambda).lo));
            }
            out << sigma.name() << ',' << num(cfg.m) << ',' << n << ',' << num(lambda) << ',' << num(worst) << '\n';
        }
    }
    return kSuccess;
}

int cmd_convergence(const RunConfig& cfg, std::ostream& out) {
    const CorpusEntry entry = corpus_by_id(cfg.function);
    const FuzzyFunction& f = entry.function;
    const SigmoidalFunction sigma = sigmoid_by_name(cfg.sigma, cfg.m);
    const Metric metric = parse_metric(cfg.metric);
    if (!f.has_analytic_modulus(metric)) {
        throw MissingAnalyticModulus("'" + entry.id + "' has no closed-form " + std::string(to_string(metric)) +
                                     " modulus");
    }
    const bool geometric = metric == Metric::sendograph || metric == Metric::endograph;
    const double factor = geometric ? std::sqrt(2.0) : 1.0;
    const auto xs = linspace(f.a(), f.b(), static_cast<std::size_t>(geometric ? cfg.probes : cfg.grid));
    const double lambda = metric == Metric::level ? table_levels(cfg).front() : 1.0;

    out << "n,sup_error,bound,ratio\n";
    for (int n : default_ns(cfg)) {
        const double h = (f.b() - f.a()) / n;
        const double bound = factor * f.analytic_modulus(metric)(h, lambda);
        const HausdorffResult err = measure_sup_error(f, sigma, n, metric, xs, metric_options(cfg), lambda);
        const double ratio = bound > 0.0 ? err.value / bound : (err.value > 0.0 ? INFINITY : 0.0);
        out << n << ',' << num(err.value) << ',' << num(bound) << ',' << num(ratio) << '\n';
    }
    return kSuccess;
}

int cmd_metric(const RunConfig& cfg, std::ostream& out) {
    const CorpusEntry entry = corpus_by_id(cfg.function);
    const FuzzyNumber u = entry.function(cfg.t1);
    const FuzzyNumber v = entry.function(cfg.t2);
    const MetricOptions options = metric_options(cfg);
    const auto ds = sendograph_distance(u, v, options);
    const auto de = endograph_distance(u, v, options);
    out << "t1,t2,d_inf,D_S,D_S_bound,D_E,D_E_bound\n";
    out << num(cfg.t1) << ',' << num(cfg.t2) << ',' << num(sup_distance(u, v, cfg.levels)) << ',' << num(ds.value)
        << ',' << num(ds.error_bound) << ',' << num(de.value) << ',' << num(de.error_bound) << '\n';
    return kSuccess;
}

namespace {

struct JacksonCase {
    std::string function;
    std::string sigma;
    Metric metric;
    std::vector<int> ns;
};

const std::vector<JacksonCase>& jackson_cases() {
    static const std::vector<JacksonCase> cases{
        {"level-example", "ramp", Metric::level, {2, 6, 10, 50, 100, 1000}},
        {"level-example", "heaviside", Metric::level, {10, 50, 100, 1000}},
        {"triangular:0.5", "ramp", Metric::sup, {4, 16, 64}},
        {"triangular:0.5", "heaviside", Metric::sup, {4, 16, 64}},
        {"triangular:0.5", "ramp", Metric::sendograph, {4, 16, 64}},
        {"triangular:0.5", "ramp", Metric::endograph, {4, 16, 64}},
        {"constant:1", "ramp", Metric::sup, {1, 10}},
        {"end-not-send", "ramp", Metric::endograph, {2, 4, 8}},
    };
    return cases;
}

using SuiteRunner = std::function<std::vector<PropertyReport>(const RunConfig&)>;

VerifyConfig verify_config(const RunConfig& cfg) {
    VerifyConfig v;
    v.seed = cfg.seed;
    v.trials = cfg.trials;
    v.spacing = cfg.spacing;
    return v;
}

const std::vector<std::pair<std::string, SuiteRunner>>& suites() {
    static const std::vector<std::pair<std::string, SuiteRunner>> table{
        {"sigmoid-class", [](const RunConfig&) { return run_sigmoid_class(); }},
        {"plane-inequality", [](const RunConfig& c) { return std::vector{run_plane_inequality(verify_config(c))}; }},
        {"convex-levels", [](const RunConfig& c) { return std::vector{run_convex_levels(verify_config(c))}; }},
        {"endograph-membership", [](const RunConfig& c) { return run_endograph_membership(verify_config(c)); }},
        {"sendograph-bounds",
         [](const RunConfig& c) { return run_metric_properties(Metric::sendograph, verify_config(c)); }},
        {"endograph-bounds",
         [](const RunConfig& c) { return run_metric_properties(Metric::endograph, verify_config(c)); }},
        {"metric-axioms",
         [](const RunConfig& c) {
             std::vector<PropertyReport> all;
             for (Metric m : {Metric::sup, Metric::sendograph, Metric::endograph}) {
                 auto r = run_metric_axioms(m, verify_config(c));
                 all.insert(all.end(), r.begin(), r.end());
             }
             return all;
         }},
        {"ordering", [](const RunConfig& c) { return std::vector{run_ordering(verify_config(c))}; }},
        {"jackson",
         [](const RunConfig& c) {
             JacksonOptions options;
             options.probes = c.grid;
             options.geometric_probes = c.probes;
             options.metric = metric_options(c);
             if (!c.lambdas.empty()) options.levels = c.lambdas;
             std::vector<PropertyReport> all;
             for (const auto& jc : jackson_cases()) {
                 auto r = run_jackson_suite(corpus_by_id(jc.function), sigmoid_by_name(jc.sigma, c.m), jc.ns,
                                            jc.metric, options);
                 all.insert(all.end(), r.begin(), r.end());
             }
             return all;
         }},
    };
    return table;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
    std::vector<std::string> names;
    for (const auto& [name, runner] : suites()) names.push_back(name);
    return names;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    bool ok = true;
    out << "id,trials,worst_slack,seed,status\n";
    for (const auto& [name, runner] : suites()) {
        if (!cfg.suites.empty() && std::find(cfg.suites.begin(), cfg.suites.end(), name) == cfg.suites.end()) {
            continue;
        }
        for (const PropertyReport& r : runner(cfg)) {
            out << format_report(r) << '\n';
            ok = ok && r.passed();
        }
        out.flush();
    }
    return ok ? kSuccess : kPropertyFailure;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Neural-network operator experiments on fuzzy-number-valued functions"};
    app.require_subcommand(1);

    auto common = [&cfg](CLI::App* sub) {
        sub->add_option("--function", cfg.function, "corpus id: level-example | end-not-send | triangular[:w] | constant[:c]");
        sub->add_option("--sigma", cfg.sigma, "ramp | heaviside | smooth_ramp");
        sub->add_option("--m", cfg.m, "sigmoid saturation parameter");
        sub->add_option("--n", cfg.ns, "node counts (comma list)")->delimiter(',');
        sub->add_option("--lambda", cfg.lambdas, "levels (comma list)")->delimiter(',');
        sub->add_option("--grid", cfg.grid, "x-grid size, endpoints included");
        sub->add_option("--spacing", cfg.spacing, "Hausdorff covering spacing g");
        sub->add_option("--out", cfg.out, "output file (default stdout)");
        sub->add_option("--seed", cfg.seed, "master seed");
        sub->add_option("--levels", cfg.levels, "sampling resolution for analytic values");
        sub->add_option("--probes", cfg.probes, "x-probes for sendograph/endograph sweeps");
    };

    CLI::App* table = app.add_subcommand("table", "max level error of S_n over the x-grid");
    CLI::App* convergence = app.add_subcommand("convergence", "sup error against the Jackson bound");
    CLI::App* metric = app.add_subcommand("metric", "distances between f(t1) and f(t2)");
    CLI::App* verify = app.add_subcommand("verify", "randomized property suites");
    for (CLI::App* sub : {table, convergence, metric, verify}) common(sub);
    convergence->add_option("--metric", cfg.metric, "sup | level | sendograph | endograph");
    metric->add_option("--t1", cfg.t1);
    metric->add_option("--t2", cfg.t2);
    verify->add_option("--suite", cfg.suites, "suites to run (comma list, default all)")->delimiter(',');
    verify->add_option("--trials", cfg.trials, "trials per randomized property");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream help;
        const int code = app.exit(e, help, help);
        (code == 0 ? out : err) << help.str();
        return code == 0 ? kSuccess : kUsageError;
    }
    for (CLI::App* sub : {table, convergence, metric, verify}) {
        if (sub->parsed()) cfg.command = sub->get_name();
    }

    try {
        validate(cfg);
    } catch (const FuzzyError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    std::ofstream file;
    if (!cfg.out.empty()) {
        file.open(cfg.out);
        if (!file) {
            err << "error: cannot open " << cfg.out << '\n';
            return kUsageError;
        }
    }
    std::ostream& sink = cfg.out.empty() ? out : file;

    static const std::map<std::string, int (*)(const RunConfig&, std::ostream&)> commands{
        {"table", cmd_table}, {"convergence", cmd_convergence}, {"metric", cmd_metric}, {"verify", cmd_verify}};
    try {
        return commands.at(cfg.command)(cfg, sink);
    } catch (const FuzzyError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
}

}  // namespace fuzzynn::cli
