#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hilfer/cli/commands.hpp"
#include "hilfer/cli/run_config.hpp"
#include "hilfer/cli/verify_suites.hpp"
#include "hilfer/hilfer.hpp"

using namespace hilfer;
using namespace hilfer::cli;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("hilfer_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) const {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    static std::string slurp(const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }

    fs::path dir_;
};

RunConfig parse(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

const char* kLinear =
    "kernel = linear\nalpha = 0.5\nbeta = 1\nu_a = 1\nrhs = linear_in_u\nrhs_params = 0.5\nmesh_N = 64\n";

}  // namespace

TEST(ParseNumber, DecimalsAndFractions) {
    EXPECT_DOUBLE_EQ(parse_number("0.25"), 0.25);
    EXPECT_DOUBLE_EQ(parse_number(" 1/3 "), 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(parse_number("-2/8"), -0.25);
    EXPECT_DOUBLE_EQ(parse_number("1e-3"), 1e-3);
    EXPECT_THROW(parse_number("abc"), std::invalid_argument);
    EXPECT_THROW(parse_number("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_number(""), std::invalid_argument);
}

TEST(ParseConfig, AllKeys) {
    const RunConfig c = parse(
        "# comment line\n"
        "kernel = exp   # trailing comment\n"
        "a = 0\nb = 2\nalpha = 1/2\nbeta = 1/3\nu_a = 1.5\n"
        "rhs = implicit_contraction\nrhs_params = 0.5, 1, 0.8\n"
        "M = 0.2\nMstar = 1/4\nmesh_N = 64\ngrading_r = 3\npicard_tol = 1e-9\nout = x.csv\n\n");
    EXPECT_EQ(c.kernel, "exp");
    EXPECT_DOUBLE_EQ(c.b, 2.0);
    EXPECT_DOUBLE_EQ(c.beta, 1.0 / 3.0);
    EXPECT_EQ(c.rhs_params, (std::vector<double>{0.5, 1.0, 0.8}));
    EXPECT_DOUBLE_EQ(*c.M, 0.2);
    EXPECT_DOUBLE_EQ(*c.Mstar, 0.25);
    EXPECT_EQ(c.mesh_N, 64u);
    EXPECT_DOUBLE_EQ(c.grading_r, 3.0);
    EXPECT_DOUBLE_EQ(c.picard_tol, 1e-9);
    EXPECT_EQ(c.out, "x.csv");
    const ProblemSpec p = c.problem();
    EXPECT_DOUBLE_EQ(p.lipschitz_M(), 0.2);
    EXPECT_DOUBLE_EQ(p.lipschitz_Mstar(), 0.25);
}

TEST(ParseConfig, Example5ConstantsAutoFilled) {
    const RunConfig c = parse("kernel = sqrt_shift\nalpha = 1/2\nbeta = 1/3\nu_a = 1\nrhs = example5\n");
    const ProblemSpec p = c.problem();
    EXPECT_DOUBLE_EQ(p.lipschitz_M(), 0.1);
    EXPECT_DOUBLE_EQ(p.lipschitz_Mstar(), 0.1);
    EXPECT_NEAR(p.order().gamma(), 2.0 / 3.0, 1e-15);
}

TEST(ParseConfig, ErrorsNameLineAndKey) {
    auto message = [](const std::string& text) {
        try {
            parse(text);
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::ConfigError);
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_NE(message("kernel = linear\nalpha = x\n").find("line 2, key 'alpha'"), std::string::npos);
    EXPECT_NE(message("kernel = linear\nfoo = 1\n").find("unknown key"), std::string::npos);
    EXPECT_NE(message("kernel = linear\nkernel = exp\n").find("duplicate"), std::string::npos);
    EXPECT_NE(message("kernel linear\n").find("line 1"), std::string::npos);
    EXPECT_NE(message("kernel = linear\nalpha = 0.5\n").find("missing required key"), std::string::npos);
    EXPECT_NE(message(std::string(kLinear) + "mesh_N = 2.5\n").find("mesh_N"), std::string::npos);
}

TEST_F(CliTest, SolveWritesCsvWithOneRowPerNode) {
    const std::string cfg = write("lin.cfg", std::string(kLinear) + "out = " + path("lin.csv") + "\n");
    std::ostringstream out, log;
    ASSERT_EQ(cmd_solve(cfg, {out, log, ""}), kExitOk) << log.str();
    const auto rows = csv_rows(slurp(path("lin.csv")));
    ASSERT_EQ(rows.size(), 66u);
    EXPECT_EQ(rows[0], (std::vector<std::string>{"t", "psi_t", "weighted_u", "u", "F", "residual"}));
    EXPECT_NE(out.str().find("partition: 1 piece"), std::string::npos);
    EXPECT_NE(out.str().find("eta = 0.56419"), std::string::npos);
    const double u1 = std::stod(rows.back()[3]);
    EXPECT_NEAR(u1, 1.9523604891825570933, 2e-3);
    EXPECT_EQ(slurp(path("lin.csv")).find('\r'), std::string::npos);
}

TEST_F(CliTest, SolveWithoutOutWritesCsvToStdout) {
    const std::string cfg = write("lin.cfg", kLinear);
    std::ostringstream out, log;
    ASSERT_EQ(cmd_solve(cfg, {out, log, ""}), kExitOk);
    EXPECT_EQ(out.str().rfind("t,psi_t,weighted_u,u,F,residual\n", 0), 0u);
    EXPECT_NE(log.str().find("final residual"), std::string::npos);
}

TEST_F(CliTest, ZeroRhsGivesConstantWeightedSolution) {
    const std::string cfg = write("zero.cfg",
                                  "kernel = exp\nalpha = 0.5\nbeta = 0.5\nu_a = 2\nrhs = linear_in_u\n"
                                  "rhs_params = 0\nmesh_N = 32\n");
    std::ostringstream out, log;
    ASSERT_EQ(cmd_solve(cfg, {out, log, path("zero.csv")}), kExitOk);
    const auto rows = csv_rows(slurp(path("zero.csv")));
    ASSERT_EQ(rows.size(), 34u);
    const double expected = 2.0 / gamma_fn(0.75);
    for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_NEAR(std::stod(rows[i][2]), expected, 1e-15);
    // u is singular at t = a when gamma < 1: blank cells.
    EXPECT_EQ(rows[1][3], "");
    EXPECT_EQ(rows[1][4], "");
}

TEST_F(CliTest, MstarOneIsRejected) {
    const std::string cfg = write("bad.cfg", std::string(kLinear) + "Mstar = 1\n");
    std::ostringstream out, log;
    EXPECT_EQ(cmd_solve(cfg, {out, log, ""}), kExitFailure);
    EXPECT_NE(log.str().find("M* < 1"), std::string::npos) << log.str();
}

TEST_F(CliTest, MissingConfigFile) {
    std::ostringstream out, log;
    EXPECT_EQ(cmd_solve(path("nope.cfg"), {out, log, ""}), kExitFailure);
    EXPECT_NE(log.str().find("cannot read"), std::string::npos);
}

TEST(ExitCode, NonConvergenceMapsToTwo) {
    const FractionalOrder o(0.5, 0.5);
    const ProblemSpec p(builtin_kernel("linear", 0.0, 1.0), o, 1.0, RhsSpec::linear_in_u(0.5));
    SolveConfig cfg;
    cfg.mesh_N = 64;
    cfg.picard_max_iters = 2;
    try {
        solve_cauchy(p, cfg);
        FAIL() << "expected NonConvergence";
    } catch (const Error& e) {
        EXPECT_EQ(exit_code(e), kExitNonConvergence);
    }
    EXPECT_EQ(exit_code(Error(ErrorCode::ConfigError, "x")), kExitFailure);
    EXPECT_EQ(exit_code(Error(ErrorCode::InnerDivergence, "x")), kExitFailure);
}

TEST_F(CliTest, SolveIsByteIdenticalAcrossRuns) {
    const std::string cfg = write("e5.cfg", "kernel = sqrt_shift\nalpha = 1/2\nbeta = 1/3\nu_a = 1\nrhs = example5\n");
    std::ostringstream o1, l1, o2, l2;
    ASSERT_EQ(cmd_solve(cfg, {o1, l1, path("a.csv")}), kExitOk);
    ASSERT_EQ(cmd_solve(cfg, {o2, l2, path("b.csv")}), kExitOk);
    EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
    EXPECT_EQ(csv_rows(slurp(path("a.csv"))).size(), 514u);
    EXPECT_NE(o1.str().find("eta = 0.104378"), std::string::npos);
}

TEST_F(CliTest, BoundsDataModeZeroDelta) {
    const std::string cfg = write("lin.cfg", kLinear);
    std::ostringstream out, log;
    BoundsOptions opts;
    opts.delta = 0.0;
    ASSERT_EQ(cmd_bounds(cfg, opts, {out, log, path("b.csv")}), kExitOk);
    const auto rows = csv_rows(slurp(path("b.csv")));
    EXPECT_EQ(rows[0], (std::vector<std::string>{"t", "diff", "bound", "margin"}));
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_LE(std::stod(rows[i][1]), 2e-10);
        EXPECT_GE(std::stod(rows[i][3]), 0.0);
    }
}

TEST_F(CliTest, BoundsDataModeTightForLinear) {
    const std::string cfg = write("lin.cfg", kLinear);
    std::ostringstream out, log;
    BoundsOptions opts;
    opts.delta = 0.01;
    ASSERT_EQ(cmd_bounds(cfg, opts, {out, log, path("b.csv")}), kExitOk);
    const auto rows = csv_rows(slurp(path("b.csv")));
    for (std::size_t i = 2; i < rows.size(); ++i) EXPECT_LE(std::abs(std::stod(rows[i][3])), 1e-3);
}

TEST_F(CliTest, BoundsOrderModeWithZeroLipschitzIsA) {
    const std::string cfg = write("ps.cfg",
                                  "kernel = linear\nalpha = 0.5\nbeta = 0.5\nu_a = 1\nrhs = power_source\n"
                                  "rhs_params = 1, 1\nmesh_N = 64\n");
    std::ostringstream out, log;
    BoundsOptions opts;
    opts.mode = DependenceMode::Order;
    opts.epsilon = 0.1;
    ASSERT_EQ(cmd_bounds(cfg, opts, {out, log, path("o.csv")}), kExitOk) << log.str();
    const auto rows = csv_rows(slurp(path("o.csv")));
    const ProblemSpec p = parse(slurp(cfg)).problem();
    const double mu = 1.0 - (0.75 + 0.1 * (0.5 - 1.0));
    const double f_sup = 1.0;  // f = w^0
    for (std::size_t i = 2; i < rows.size(); ++i) {
        const double t = std::stod(rows[i][0]);
        const double A = order_dependence_A(p, {0.1, 1.0, f_sup}, t) * std::pow(t, mu);
        EXPECT_NEAR(std::stod(rows[i][2]), A, 1e-12 * (1.0 + A));
    }
}

TEST(CliVerify, SuitesAndExitCodes) {
    std::ostringstream out, log;
    EXPECT_EQ(cmd_verify("ml", {out, log, ""}), kExitOk);
    EXPECT_NE(out.str().find("ml: 5 checks"), std::string::npos);
    std::ostringstream out2, log2;
    EXPECT_EQ(cmd_verify("bogus-suite", {out2, log2, ""}), kExitFailure);
    EXPECT_NE(log2.str().find("unknown verify suite"), std::string::npos);
    EXPECT_EQ(suite_names().size(), 5u);
}

TEST(CliVerify, SemigroupSuitePasses) {
    const auto res = run_suites("semigroup");
    ASSERT_EQ(res.size(), 1u);
    EXPECT_EQ(res[0].checks.size(), 8u);
    EXPECT_TRUE(res[0].passed());
}

TEST(CliDemo, PrintsContractionCheck) {
    std::ostringstream out, log;
    ASSERT_EQ(cmd_demo({out, log, ""}), kExitOk);
    const std::string s = out.str();
    EXPECT_NE(s.find("eta(1) = 0.104378"), std::string::npos) << s;
    EXPECT_NE(s.find("contraction condition holds"), std::string::npos);
    EXPECT_NE(s.find("final residual"), std::string::npos);
}

TEST(CliFormat, RoundTrip) {
    for (double x : {0.1, 1.0 / 3.0, 1.9523604891825571, 6.02e23, -7.5e-300}) {
        EXPECT_EQ(std::stod(format_number(x)), x);
    }
    EXPECT_EQ(format_number(0.5), "0.5");
}
