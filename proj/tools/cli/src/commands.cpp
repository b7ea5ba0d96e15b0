#include "hilfer/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include "hilfer/cli/run_config.hpp"
#include "hilfer/cli/verify_suites.hpp"
#include "hilfer/error.hpp"
#include "hilfer/special_functions.hpp"

namespace hilfer::cli {

namespace {

constexpr double kMarginSlack = 5e-4;

std::string short_number(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

// Writes the CSV to the configured path, or to io.out when there is none.
// Returns the stream that should receive the human-readable summary.
std::ostream& emit_csv(CommandIo& io, const std::string& path, const std::function<void(std::ostream&)>& body) {
    const std::string& target = io.out_override.empty() ? path : io.out_override;
    if (target.empty()) {
        body(io.out);
        return io.log;
    }
    std::ofstream file(target, std::ios::binary | std::ios::trunc);
    if (!file) fail(ErrorCode::ConfigError, "cannot write output file '" + target + "'");
    body(file);
    if (!file) fail(ErrorCode::ConfigError, "write to '" + target + "' failed");
    return io.out;
}

void print_solve_summary(std::ostream& os, const SolveReport& rep) {
    os << "partition: " << rep.intervals.size() << " piece(s)\n";
    for (std::size_t k = 0; k < rep.intervals.size(); ++k) {
        const IntervalReport& iv = rep.intervals[k];
        os << "  [" << short_number(iv.t_begin) << ", " << short_number(iv.t_end) << "]  eta = "
           << short_number(iv.eta) << "  sweeps = " << iv.sweeps() << '\n';
    }
    os << "final residual: " << short_number(rep.final_residual) << '\n';
    if (rep.certificate) os << "certificate: " << short_number(*rep.certificate) << '\n';
}

int report_error(std::ostream& log, const Error& e) {
    log << "error: " << e.what() << '\n';
    return exit_code(e);
}

}  // namespace

int exit_code(const Error& e) { return e.code() == ErrorCode::NonConvergence ? kExitNonConvergence : kExitFailure; }

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_solution_csv(std::ostream& os, const ProblemSpec& problem, const SolveReport& report) {
    const WeightedGridFunction& u = report.solution;
    const WeightedGridFunction& F = report.rhs_values;
    const GradedMesh& mesh = u.mesh();
    const std::vector<double> res = volterra_residuals(problem, u, F);
    const bool singular = u.weight_exponent() > 0.0;
    os << "t,psi_t,weighted_u,u,F,residual\n";
    for (std::size_t j = 0; j < u.size(); ++j) {
        const bool blank = singular && j == 0;
        os << format_number(mesh.t(j)) << ',' << format_number(mesh.psi(j)) << ',' << format_number(u[j]) << ','
           << (blank ? "" : format_number(u.unweighted(j))) << ',' << (blank ? "" : format_number(F.unweighted(j)))
           << ',' << format_number(res[j]) << '\n';
    }
}

void write_bounds_csv(std::ostream& os, const DependenceReport& report) {
    os << "t,diff,bound,margin\n";
    for (std::size_t j = 0; j < report.diff.size(); ++j) {
        os << format_number(report.mesh->t(j)) << ',' << format_number(report.diff[j]) << ','
           << format_number(report.bound[j]) << ',' << format_number(report.margin[j]) << '\n';
    }
}

int cmd_solve(const std::string& config_path, CommandIo io) {
    RunConfig cfg;
    std::optional<ProblemSpec> problem;
    SolveConfig scfg;
    try {
        cfg = load_config(config_path);
        problem.emplace(cfg.problem());
        scfg = cfg.solve_config();
    } catch (const Error& e) {
        io.log << "error: " << config_path << ": " << e.what() << '\n';
        return kExitFailure;
    }
    try {
        const SolveReport rep = solve_cauchy(*problem, scfg);
        std::ostream& log = emit_csv(io, cfg.out, [&](std::ostream& os) { write_solution_csv(os, *problem, rep); });
        print_solve_summary(log, rep);
        return kExitOk;
    } catch (const NonConvergenceError& e) {
        if (e.report()) print_solve_summary(io.log, *e.report());
        return report_error(io.log, e);
    } catch (const Error& e) {
        return report_error(io.log, e);
    }
}

int cmd_verify(std::string_view suite, CommandIo io) {
    std::vector<SuiteResult> results;
    try {
        results = run_suites(suite);
    } catch (const Error& e) {
        io.log << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    bool all = true;
    for (const SuiteResult& s : results) {
        double worst = 0.0;
        for (const CheckResult& c : s.checks) {
            char line[200];
            std::snprintf(line, sizeof line, "  %-52s %10.3e  tol %.1e  %s\n", c.label.c_str(), c.value, c.tol,
                          c.pass ? "pass" : "FAIL");
            io.out << line;
            if (c.tol > 0.0 && (c.value <= c.tol || !c.pass)) worst = std::max(worst, c.value / c.tol);
        }
        io.out << s.name << ": " << s.checks.size() << " checks, worst value/tol " << short_number(worst) << ", "
               << (s.passed() ? "PASS" : "FAIL") << '\n';
        all = all && s.passed();
    }
    return all ? kExitOk : kExitFailure;
}

int cmd_bounds(const std::string& config_path, const BoundsOptions& opts, CommandIo io) {
    RunConfig cfg;
    std::optional<ProblemSpec> problem;
    SolveConfig scfg;
    try {
        cfg = load_config(config_path);
        problem.emplace(cfg.problem());
        scfg = cfg.solve_config();
    } catch (const Error& e) {
        io.log << "error: " << config_path << ": " << e.what() << '\n';
        return kExitFailure;
    }
    try {
        DependenceReport rep;
        if (opts.mode == DependenceMode::Data) {
            rep = verify_dependence(*problem, DataPerturbation{opts.delta}, scfg);
        } else {
            OrderPerturbation pert{opts.epsilon, opts.u_a_star.value_or(problem->u_a()), 0.0};
            rep = verify_dependence(*problem, pert, scfg);
        }
        std::ostream& log = emit_csv(io, cfg.out, [&](std::ostream& os) { write_bounds_csv(os, rep); });
        log << "mode: " << (opts.mode == DependenceMode::Data ? "data" : "order")
            << "  weight: " << short_number(rep.weight) << '\n'
            << "max diff: " << short_number(rep.max_diff) << "  min margin: " << short_number(rep.min_margin) << '\n';
        if (rep.bound_not_tight) log << "note: bound exceeds the measured difference by more than two orders\n";
        return rep.min_margin >= -kMarginSlack ? kExitOk : kExitFailure;
    } catch (const Error& e) {
        io.log << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::ConfigError || e.code() == ErrorCode::DomainError ? kExitFailure
                                                                                        : kExitNonConvergence;
    }
}

int cmd_demo(CommandIo io) {
    const std::vector<CatalogEntry> catalog = builtin_catalog();
    const CatalogEntry& demo = catalog.front();
    const ProblemSpec& p = demo.problem;
    std::ostream& os = io.out;

    os << "problem: D^{1/2,1/3;psi} u(t) = 1 / ((1 + 9 e^t)(1 + |u(t)| + |D^{1/2,1/3;psi} u(t)|))\n"
       << "         psi(t) = sqrt(t + 1), t in [0, 1], I^{1-gamma;psi} u(0) = " << short_number(p.u_a()) << '\n'
       << "gamma = " << short_number(p.order().gamma()) << ", M = " << short_number(p.lipschitz_M())
       << ", M* = " << short_number(p.lipschitz_Mstar()) << '\n';

    // eta(t) = Gamma(gamma) (psi(t) - psi(0))^alpha / Gamma(gamma + alpha) * M / (1 - M*) grows with t.
    const double g = p.order().gamma();
    const double a = p.order().alpha();
    const double eta = gamma_fn(g) / gamma_fn(g + a) * std::pow(p.kernel().offset(p.kernel().b()), a) *
                       p.effective_lipschitz();
    os << "contraction constant on [0, t]: eta(t) <= eta(1) = " << short_number(eta) << '\n';
    os << (eta < 1.0 ? "contraction condition holds: eta(t) < 1 for all t in [0, 1]\n"
                     : "contraction condition fails on [0, 1]\n");

    try {
        const SolveReport rep = solve_cauchy(p, demo.config);
        os << "picard iteration history (weighted sup-norm of successive differences):\n";
        for (const IntervalReport& iv : rep.intervals) {
            for (std::size_t k = 0; k < iv.residuals.size(); ++k) {
                os << "  sweep " << k + 1 << ": " << short_number(iv.residuals[k]);
                if (k > 0 && iv.residuals[k - 1] > 0.0) {
                    os << "  ratio " << short_number(iv.residuals[k] / iv.residuals[k - 1]);
                }
                os << '\n';
            }
        }
        os << "final residual: " << short_number(rep.final_residual) << '\n';
        os << "u(1) = " << short_number(rep.solution.unweighted(rep.solution.size() - 1)) << '\n';
        return kExitOk;
    } catch (const Error& e) {
        return report_error(io.log, e);
    }
}

}  // namespace hilfer::cli
