#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hilfer/cli/commands.hpp"

int main(int argc, char** argv) {
    using namespace hilfer::cli;

    CLI::App app{"Implicit psi-Hilfer Cauchy problems: solver, operator checks and dependence bounds"};
    app.require_subcommand(1);

    std::string config;
    std::string out;

    auto* solve = app.add_subcommand("solve", "Solve the problem described by a config file and write a CSV");
    solve->add_option("config", config, "Config file (key = value lines)")->required();
    solve->add_option("--out", out, "CSV path (overrides the config's out key)");

    std::string suite;
    auto* verify = app.add_subcommand("verify", "Run an operator / special-function check suite");
    verify->add_option("suite", suite, "power_rule, semigroup, inverse, expansion, ml or all")->required();

    std::string mode = "data";
    double eps = 0.0;
    double delta = 0.0;
    std::optional<double> ua_star;
    auto* bounds = app.add_subcommand("bounds", "Compare a perturbed solve with its continuous-dependence bound");
    bounds->add_option("config", config, "Config file")->required();
    bounds->add_option("--mode", mode, "order or data")->check(CLI::IsMember({"order", "data"}));
    bounds->add_option("--eps", eps, "Order perturbation (alpha -> alpha - eps)");
    bounds->add_option("--delta", delta, "Initial-value perturbation (u_a -> u_a + delta)");
    bounds->add_option("--ua-star", ua_star, "Initial value of the order-perturbed problem (default u_a)");
    bounds->add_option("--out", out, "CSV path (overrides the config's out key)");

    auto* demo = app.add_subcommand("demo", "Run the builtin sqrt_shift example end to end");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitFailure;
    }

    CommandIo io{std::cout, std::cerr, out};
    if (*solve) return cmd_solve(config, io);
    if (*verify) return cmd_verify(suite, io);
    if (*bounds) {
        BoundsOptions opts;
        opts.mode = mode == "order" ? hilfer::DependenceMode::Order : hilfer::DependenceMode::Data;
        opts.epsilon = eps;
        opts.delta = delta;
        opts.u_a_star = ua_star;
        return cmd_bounds(config, opts, io);
    }
    if (*demo) return cmd_demo(io);
    return kExitFailure;
}
