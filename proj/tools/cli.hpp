#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace fuzzynn::cli {

enum ExitCode { kSuccess = 0, kPropertyFailure = 1, kUsageError = 2 };

struct RunConfig {
    std::string command;
    std::string function = "level-example";
    std::string sigma = "ramp";
    double m = 1.0;
    std::vector<int> ns;          // empty: per-command default
    std::vector<double> lambdas;  // empty: {0.50005, 0.6, 0.8}
    int grid = 10000;             // x-grid, both ends included
    double spacing = 1e-3;        // Hausdorff covering spacing
    std::string out;              // empty: stdout
    std::uint64_t seed = 20240607;

    std::string metric = "sup";
    double t1 = 0.2;
    double t2 = 0.7;
    std::vector<std::string> suites;  // empty: all
    long trials = 1000;
    int probes = 101;   // x-probes for D_S / D_E sweeps
    int levels = 256;   // sampling resolution for Analytic values in geometry
};

// Throws FuzzyError subclasses on values a command cannot accept.
void validate(const RunConfig& cfg);

int cmd_table(const RunConfig& cfg, std::ostream& out);
int cmd_convergence(const RunConfig& cfg, std::ostream& out);
int cmd_metric(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const RunConfig& cfg, std::ostream& out);

std::vector<std::string> verify_suite_names();

/// Parses argv (without the program name), runs the command and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fuzzynn::cli
