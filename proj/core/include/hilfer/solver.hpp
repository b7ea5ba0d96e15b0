#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "hilfer/error.hpp"
#include "hilfer/grid_function.hpp"
#include "hilfer/mesh.hpp"
#include "hilfer/problem.hpp"

namespace hilfer {

/// a = t_0 < t_1 < ... < t_K = b with the contraction constant of each piece,
///   eta_k = Gamma(gamma) (psi(t_{k+1}) - psi(t_k))^alpha / Gamma(gamma + alpha) * M / (1 - M*).
struct Partition {
    std::vector<double> breakpoints;
    std::vector<double> contraction;

    [[nodiscard]] std::size_t intervals() const noexcept { return contraction.size(); }
};

struct SolveConfig {
    std::size_t mesh_N = 512;  ///< panels per subinterval
    double grading_r = 0.0;    ///< 0 selects max(1, 2 / gamma)
    double picard_tol = 1e-10;
    int picard_max_iters = 200;
    double inner_tol = 1e-12;
    int inner_max_iters = 100;
    double safety_factor = 0.9;
    /// Additional breakpoints merged into the contraction partition.
    std::vector<double> extra_breakpoints;

    /// Throws InvalidArgument (or InvalidGrading) on out-of-range settings.
    void validate() const;
};

struct IntervalReport {
    double t_begin = 0.0;
    double t_end = 0.0;
    std::size_t first_node = 0;  ///< first node iterated on this piece
    std::size_t last_node = 0;
    double eta = 0.0;
    /// r_k = ||u_k - u_{k-1}|| (weighted) for every sweep.
    std::vector<double> residuals;

    [[nodiscard]] int sweeps() const noexcept { return static_cast<int>(residuals.size()); }
};

struct SolveReport {
    WeightedGridFunction solution;     ///< weight 1 - gamma on the global mesh
    WeightedGridFunction rhs_values;   ///< F_u, same weight
    Partition partition;
    std::vector<IntervalReport> intervals;
    double final_residual = 0.0;       ///< ||u - T(u)|| in the weighted norm
    /// eta / (1 - eta) * r_last, maximised over pieces: a-posteriori bound on the
    /// distance to the fixed point of the discrete scheme. Empty if eta >= 1.
    std::optional<double> certificate;

    [[nodiscard]] std::vector<int> picard_iters_per_interval() const;
};

/// Raised when a piece exhausts picard_max_iters; carries the partial report.
class NonConvergenceError : public Error {
public:
    NonConvergenceError(const std::string& what, std::shared_ptr<const SolveReport> report)
        : Error(ErrorCode::NonConvergence, what), report_(std::move(report)) {}

    [[nodiscard]] const std::shared_ptr<const SolveReport>& report() const noexcept { return report_; }

private:
    std::shared_ptr<const SolveReport> report_;
};

/// Weighted seed u_0 = u_a / Gamma(gamma) (psi - psi(a))^{gamma-1}: constant u_a / Gamma(gamma).
WeightedGridFunction seed_iterate(const ProblemSpec& problem, MeshPtr mesh);

/// F with |F - f(t, u_t, F)| <= inner_tol (1 + |F|) by direct iteration from F_init.
/// Throws InnerDivergence after inner_max_iters.
double inner_fixed_point(const ProblemSpec& problem, double t, double u_t, double F_init, const SolveConfig& cfg);

/// Greedy left-to-right partition with eta_k <= safety_factor. M = 0 gives one piece.
/// Throws DegenerateStep if the admissible step underflows.
Partition partition_domain(const ProblemSpec& problem, const SolveConfig& cfg);

/// Weighted F_u on every node (inner fixed point warm-started from F_prev).
WeightedGridFunction evaluate_rhs(const ProblemSpec& problem, const WeightedGridFunction& u,
                                  const WeightedGridFunction& F_prev, const SolveConfig& cfg);

/// One Picard step on the whole mesh: returns (seed + I^alpha F_{u_prev}, F_{u_prev}).
std::pair<WeightedGridFunction, WeightedGridFunction> picard_sweep(const ProblemSpec& problem,
                                                                   const WeightedGridFunction& u_prev,
                                                                   const WeightedGridFunction& F_prev,
                                                                   const SolveConfig& cfg);

/// Solves the problem on the contraction partition, carrying the convolution
/// history of earlier pieces into later ones.
SolveReport solve_cauchy(const ProblemSpec& problem, const SolveConfig& cfg);

/// |u_j - seed - (I^alpha F)_j| at every node, weighted.
std::vector<double> volterra_residuals(const ProblemSpec& problem, const WeightedGridFunction& u,
                                       const WeightedGridFunction& F);

/// max_j |u_j - seed - (I^alpha F)_j| in the weighted norm.
double volterra_residual(const ProblemSpec& problem, const WeightedGridFunction& u, const WeightedGridFunction& F);

/// Global mesh for a partition: mesh_N graded panels on the first piece,
/// mesh_N uniform panels on each later piece.
MeshPtr partition_mesh(const ProblemSpec& problem, const Partition& partition, const SolveConfig& cfg);

}  // namespace hilfer
