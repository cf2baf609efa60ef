#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

using fuzzynn::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST(Cli, TableRow) {
    const auto r = invoke({"table", "--n", "10", "--lambda", "0.6"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0], "sigma,m,n,lambda,max_error");
    EXPECT_EQ(rows[1].rfind("ramp,1,10,0.59999999999999998,0.005915352176592", 0), 0u) << rows[1];
}

TEST(Cli, TableBelowHalfHasNoError) {
    const auto r = invoke({"table", "--n", "3,7", "--lambda", "0.4,0.5"});
    ASSERT_EQ(r.code, 0);
    for (const auto& row : lines(r.out)) {
        if (row.rfind("sigma", 0) == 0) continue;
        EXPECT_EQ(row.substr(row.rfind(',') + 1), "0") << row;
    }
}

TEST(Cli, HeavisideDefaultsToItsTableRows) {
    const auto r = invoke({"table", "--sigma", "heaviside"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(lines(r.out).size(), 13u);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"table", "--function", "nope"}).code, 2);
    EXPECT_EQ(invoke({"table", "--function", "triangular"}).code, 2);
    EXPECT_EQ(invoke({"table", "--sigma", "tanh"}).code, 2);
    EXPECT_EQ(invoke({"table", "--m", "0"}).code, 2);
    EXPECT_EQ(invoke({"table", "--lambda", "1.5"}).code, 2);
    EXPECT_EQ(invoke({"table", "--n", "0"}).code, 2);
    EXPECT_EQ(invoke({"table", "--n", "x"}).code, 2);
    EXPECT_EQ(invoke({"metric", "--t1", "2"}).code, 2);
    EXPECT_EQ(invoke({"verify", "--suite", "bogus"}).code, 2);
    EXPECT_EQ(invoke({"convergence", "--function", "level-example", "--metric", "sendograph"}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, MetricQuery) {
    const auto r = invoke({"metric", "--function", "end-not-send", "--t1", "0.2", "--t2", "0.7"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 2u);
    double t1, t2, dinf, ds, dsb, de, deb;
    ASSERT_EQ(std::sscanf(rows[1].c_str(), "%lf,%lf,%lf,%lf,%lf,%lf,%lf", &t1, &t2, &dinf, &ds, &dsb, &de, &deb), 7);
    EXPECT_NEAR(dinf, 0.5, 1e-12);
    EXPECT_LE(de, 0.5 + 1e-12);
    EXPECT_GE(de + deb, 0.5);

    const auto same = invoke({"metric", "--function", "triangular:0.3", "--t1", "0.4", "--t2", "0.4"});
    ASSERT_EQ(same.code, 0);
    EXPECT_NE(lines(same.out)[1].find(",0,0,"), std::string::npos);
}

TEST(Cli, ConvergenceColumns) {
    const auto r = invoke({"convergence", "--function", "triangular", "--sigma", "heaviside", "--n", "4,8,16"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto rows = lines(r.out);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0], "n,sup_error,bound,ratio");
    double prev = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        int n;
        double e, b, q;
        ASSERT_EQ(std::sscanf(rows[i].c_str(), "%d,%lf,%lf,%lf", &n, &e, &b, &q), 4);
        EXPECT_LE(q, 1.0);
        if (prev > 0.0) EXPECT_NEAR(e, prev / 2, prev * 0.01);  // first order
        prev = e;
    }
    const auto zero = invoke({"convergence", "--function", "constant:3", "--n", "2,4"});
    for (const auto& row : lines(zero.out)) {
        if (row[0] == 'n') continue;
        int n;
        double e;
        ASSERT_EQ(std::sscanf(row.c_str(), "%d,%lf", &n, &e), 2);
        EXPECT_LE(e, 1e-15);  // c*v + (1-c)*v rounds
    }
}

TEST(Cli, VerifyDeterministicAndWritesFile) {
    const std::vector<std::string> args{"verify", "--suite", "ordering,convex-levels", "--trials", "30", "--seed", "9"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    ASSERT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(lines(a.out).size(), 3u);

    const std::string path = ::testing::TempDir() + "fuzzynn_verify.csv";
    auto with_out = args;
    with_out.insert(with_out.end(), {"--out", path});
    ASSERT_EQ(invoke(with_out).code, 0);
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_EQ(text.str(), a.out);
    std::remove(path.c_str());
}
