#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "hilfer/bounds.hpp"
#include "hilfer/solver.hpp"

namespace hilfer::cli {

/// Process exit codes.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitNonConvergence = 2 };

/// Bounds-command options.
struct BoundsOptions {
    DependenceMode mode = DependenceMode::Data;
    double epsilon = 0.0;
    double delta = 0.0;
    std::optional<double> u_a_star;  ///< order mode; defaults to the base u_a
};

/// CSV output paths: when the config has no `out` key (and no override is
/// given) the CSV goes to `out` and the summary to `log`.
struct CommandIo {
    std::ostream& out;
    std::ostream& log;
    std::string out_override;
};

/// kExitNonConvergence for NonConvergence, kExitFailure otherwise.
int exit_code(const Error& e);

int cmd_solve(const std::string& config_path, CommandIo io);
int cmd_verify(std::string_view suite, CommandIo io);
int cmd_bounds(const std::string& config_path, const BoundsOptions& opts, CommandIo io);
int cmd_demo(CommandIo io);

/// `t,psi_t,weighted_u,u,F,residual`, one row per node.
void write_solution_csv(std::ostream& os, const ProblemSpec& problem, const SolveReport& report);

/// `t,diff,bound,margin`, one row per node.
void write_bounds_csv(std::ostream& os, const DependenceReport& report);

/// Round-trip decimal form (17 significant digits).
std::string format_number(double x);

}  // namespace hilfer::cli
