#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "hilfer/problem.hpp"
#include "hilfer/solver.hpp"

namespace hilfer::cli {

/// Parsed configuration file. Format: one `key = value` per line, `#` starts
/// a comment, numbers may be written as fractions `p/q`.
///
/// Recognised keys: kernel, a, b, alpha, beta, u_a, rhs, rhs_params, M, Mstar,
/// mesh_N, grading_r, picard_tol, out.
struct RunConfig {
    std::string kernel;
    double a = 0.0;
    double b = 1.0;
    double alpha = 0.0;
    double beta = 0.0;
    double u_a = 0.0;
    std::string rhs;
    std::vector<double> rhs_params;
    std::optional<double> M;
    std::optional<double> Mstar;
    std::size_t mesh_N = 512;
    double grading_r = 0.0;
    double picard_tol = 1e-10;
    std::string out;

    /// Builds the problem. Missing M / Mstar are taken from the builtin rhs.
    [[nodiscard]] ProblemSpec problem() const;
    [[nodiscard]] SolveConfig solve_config() const;
};

/// Throws Error(ConfigError) naming the line and key on malformed input.
RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::string& path);

/// Parses a decimal number or a fraction p/q.
double parse_number(const std::string& text);

}  // namespace hilfer::cli
