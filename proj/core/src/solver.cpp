#include "hilfer/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hilfer/quadrature.hpp"
#include "hilfer/special_functions.hpp"

namespace hilfer {

namespace {

constexpr std::size_t kMaxIntervals = 100000;

double contraction_constant(const ProblemSpec& p, double dpsi) {
    const double g = p.order().gamma();
    const double a = p.order().alpha();
    return gamma_fn(g) / gamma_fn(g + a) * std::pow(dpsi, a) * p.effective_lipschitz();
}

// Weighted F at mesh nodes, one node at a time.
class RhsEvaluator {
public:
    RhsEvaluator(const ProblemSpec& p, const GradedMesh& mesh, const SolveConfig& cfg)
        : p_(p), mesh_(mesh), cfg_(cfg), mu_(p.order().solution_weight()) {}

    // Node j >= 1 (or j = 0 when mu = 0) from weighted u and weighted warm start.
    [[nodiscard]] double at(std::size_t j, double v, double g_init) const {
        if (mu_ == 0.0) return inner_fixed_point(p_, mesh_.t(j), v, g_init, cfg_);
        const double s = std::pow(mesh_.w(j), mu_);
        return s * inner_fixed_point(p_, mesh_.t(j), v / s, g_init / s, cfg_);
    }

    // Node 0 once nodes 1 and 2 are known.
    [[nodiscard]] double origin(double v0, double g0_init, double g1, double g2) const {
        if (mu_ == 0.0) return at(0, v0, g0_init);
        if (auto lim = p_.rhs().weighted_origin(mu_, v0)) return *lim;
        const double w1 = mesh_.w(1);
        const double w2 = mesh_.w(2);
        return g1 - (g2 - g1) * w1 / (w2 - w1);
    }

private:
    const ProblemSpec& p_;
    const GradedMesh& mesh_;
    const SolveConfig& cfg_;
    double mu_;
};

std::vector<double> merged_breakpoints(const Partition& base, const std::vector<double>& extra) {
    std::vector<double> bp = base.breakpoints;
    const double a = bp.front();
    const double b = bp.back();
    for (double t : extra) {
        if (t > a && t < b) bp.push_back(t);
    }
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
    return bp;
}

}  // namespace

void SolveConfig::validate() const {
    auto bad = [](const std::string& what) { fail(ErrorCode::InvalidArgument, what); };
    if (mesh_N < 8) bad("mesh_N must be at least 8");
    if (grading_r != 0.0 && !(grading_r >= 1.0 && std::isfinite(grading_r))) {
        fail(ErrorCode::InvalidGrading, "grading_r must be >= 1 (or 0 for the default)");
    }
    if (!(picard_tol > 0.0)) bad("picard_tol must be positive");
    if (!(inner_tol > 0.0)) bad("inner_tol must be positive");
    if (picard_max_iters < 1) bad("picard_max_iters must be positive");
    if (inner_max_iters < 1) bad("inner_max_iters must be positive");
    if (!(safety_factor > 0.0 && safety_factor < 1.0)) bad("safety_factor must lie in (0, 1)");
}

std::vector<int> SolveReport::picard_iters_per_interval() const {
    std::vector<int> out;
    out.reserve(intervals.size());
    for (const auto& iv : intervals) out.push_back(iv.sweeps());
    return out;
}

WeightedGridFunction seed_iterate(const ProblemSpec& problem, MeshPtr mesh) {
    const double s = problem.seed_value();
    std::vector<double> v(mesh->size(), s);
    return {std::move(mesh), problem.order().solution_weight(), std::move(v)};
}

double inner_fixed_point(const ProblemSpec& problem, double t, double u_t, double F_init, const SolveConfig& cfg) {
    const double w = problem.kernel().offset(t);
    double F = F_init;
    for (int it = 0; it < cfg.inner_max_iters; ++it) {
        const double next = problem.rhs()(t, w, u_t, F);
        if (!std::isfinite(next)) break;
        const bool done = std::abs(next - F) <= cfg.inner_tol * (1.0 + std::abs(next));
        F = next;
        if (done) return F;
    }
    std::ostringstream os;
    os << "inner fixed point at t=" << t << " did not converge in " << cfg.inner_max_iters
       << " iterations (is M* < 1?)";
    fail(ErrorCode::InnerDivergence, os.str());
}

Partition partition_domain(const ProblemSpec& problem, const SolveConfig& cfg) {
    cfg.validate();
    const PsiKernel& k = problem.kernel();
    Partition part;
    part.breakpoints.push_back(k.a());
    const double L = problem.effective_lipschitz();
    if (L == 0.0) {
        part.breakpoints.push_back(k.b());
        part.contraction.push_back(0.0);
        return part;
    }
    const double g = problem.order().gamma();
    const double a = problem.order().alpha();
    const double step = std::pow(cfg.safety_factor * gamma_fn(g + a) / (gamma_fn(g) * L), 1.0 / a);
    const double psi_b = k.offset(k.b());

    double t = k.a();
    double x = 0.0;  // psi(t) - psi(a)
    while (t < k.b()) {
        if (!(step > 1e-14 * (1.0 + std::abs(k.eval(t))))) {
            std::ostringstream os;
            os << "admissible step in psi (" << step << ") underflows at t=" << t;
            fail(ErrorCode::DegenerateStep, os.str());
        }
        double next;
        if (x + step >= psi_b) {
            next = k.b();
        } else {
            next = k.inverse(k.eval(k.a()) + x + step, t, k.b());
            if (!(next > t)) {
                std::ostringstream os;
                os << "partition step collapsed at t=" << t;
                fail(ErrorCode::DegenerateStep, os.str());
            }
        }
        const double nx = k.offset(next);
        part.breakpoints.push_back(next);
        part.contraction.push_back(contraction_constant(problem, nx - x));
        if (part.contraction.size() > kMaxIntervals) {
            fail(ErrorCode::DegenerateStep, "partition needs more than 100000 pieces (M too large)");
        }
        t = next;
        x = nx;
    }
    return part;
}

MeshPtr partition_mesh(const ProblemSpec& problem, const Partition& partition, const SolveConfig& cfg) {
    const double r = cfg.grading_r == 0.0 ? default_grading(problem.order().gamma()) : cfg.grading_r;
    const std::size_t N = cfg.mesh_N;
    const auto& bp = partition.breakpoints;
    if (bp.size() == 2) return build_graded_mesh(problem.kernel(), N, r);

    std::vector<double> nodes;
    nodes.reserve((bp.size() - 1) * N + 1);
    for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
        const double lo = bp[k];
        const double hi = bp[k + 1];
        for (std::size_t j = 0; j < N; ++j) {
            const double s = static_cast<double>(j) / static_cast<double>(N);
            nodes.push_back(lo + (hi - lo) * (k == 0 ? std::pow(s, r) : s));
        }
    }
    nodes.push_back(bp.back());
    return std::make_shared<const GradedMesh>(GradedMesh::from_nodes(problem.kernel(), std::move(nodes), r));
}

WeightedGridFunction evaluate_rhs(const ProblemSpec& problem, const WeightedGridFunction& u,
                                  const WeightedGridFunction& F_prev, const SolveConfig& cfg) {
    require(u.compatible(F_prev), ErrorCode::MeshMismatch, "u and F differ in mesh or weight");
    require(u.weight_exponent() == problem.order().solution_weight(), ErrorCode::InvalidArgument,
            "solution must carry weight 1 - gamma");
    const RhsEvaluator eval(problem, u.mesh(), cfg);
    std::vector<double> g(u.size());
    for (std::size_t j = 1; j < u.size(); ++j) g[j] = eval.at(j, u[j], F_prev[j]);
    g[0] = eval.origin(u[0], F_prev[0], g[1], g[2]);
    return {u.mesh_ptr(), u.weight_exponent(), std::move(g)};
}

std::pair<WeightedGridFunction, WeightedGridFunction> picard_sweep(const ProblemSpec& problem,
                                                                   const WeightedGridFunction& u_prev,
                                                                   const WeightedGridFunction& F_prev,
                                                                   const SolveConfig& cfg) {
    WeightedGridFunction F = evaluate_rhs(problem, u_prev, F_prev, cfg);
    const ProductIntegrator integ(u_prev.mesh_ptr(), problem.order().alpha(), u_prev.weight_exponent());
    std::vector<double> v = integ.apply(F.values());
    const double s = problem.seed_value();
    for (double& x : v) x += s;
    return {WeightedGridFunction(u_prev.mesh_ptr(), u_prev.weight_exponent(), std::move(v)), std::move(F)};
}

std::vector<double> volterra_residuals(const ProblemSpec& problem, const WeightedGridFunction& u,
                                       const WeightedGridFunction& F) {
    require(u.compatible(F), ErrorCode::MeshMismatch, "u and F differ in mesh or weight");
    const ProductIntegrator integ(u.mesh_ptr(), problem.order().alpha(), u.weight_exponent());
    std::vector<double> r = integ.apply(F.values());
    const double s = problem.seed_value();
    for (std::size_t j = 0; j < u.size(); ++j) r[j] = std::abs(u[j] - s - r[j]);
    return r;
}

double volterra_residual(const ProblemSpec& problem, const WeightedGridFunction& u, const WeightedGridFunction& F) {
    const std::vector<double> r = volterra_residuals(problem, u, F);
    return *std::max_element(r.begin(), r.end());
}

SolveReport solve_cauchy(const ProblemSpec& problem, const SolveConfig& cfg) {
    cfg.validate();
    Partition part = partition_domain(problem, cfg);
    if (!cfg.extra_breakpoints.empty()) {
        part.breakpoints = merged_breakpoints(part, cfg.extra_breakpoints);
        part.contraction.clear();
        for (std::size_t k = 0; k + 1 < part.breakpoints.size(); ++k) {
            const double dpsi =
                problem.kernel().offset(part.breakpoints[k + 1]) - problem.kernel().offset(part.breakpoints[k]);
            part.contraction.push_back(contraction_constant(problem, dpsi));
        }
    }

    const MeshPtr mesh = partition_mesh(problem, part, cfg);
    const std::size_t n = mesh->size();
    const double mu = problem.order().solution_weight();
    const double seed = problem.seed_value();
    const ProductIntegrator integ(mesh, problem.order().alpha(), mu);
    const RhsEvaluator eval(problem, *mesh, cfg);

    std::vector<double> u(n, seed);
    std::vector<double> g(n, 0.0);
    std::vector<IntervalReport> reports;
    std::optional<double> certificate = 0.0;

    auto partial_report = [&](double residual) {
        return std::make_shared<const SolveReport>(SolveReport{WeightedGridFunction(mesh, mu, u),
                                                               WeightedGridFunction(mesh, mu, g), part, reports,
                                                               residual, std::nullopt});
    };

    const std::size_t N = cfg.mesh_N;
    for (std::size_t k = 0; k < part.intervals(); ++k) {
        const std::size_t start = k * N;
        const std::size_t end = (k + 1) * N;
        const std::size_t first = k == 0 ? 0 : start + 1;
        const ConvolutionBlock block(integ, first, end, first, g);

        IntervalReport rep;
        rep.t_begin = part.breakpoints[k];
        rep.t_end = part.breakpoints[k + 1];
        rep.first_node = first;
        rep.last_node = end;
        rep.eta = part.contraction[k];

        // Continuation data: seed plus the frozen history of earlier pieces.
        for (std::size_t j = first; j <= end; ++j) u[j] = seed + block.history(j);
        std::vector<double> next(n, 0.0);

        bool converged = false;
        for (int sweep = 0; sweep < cfg.picard_max_iters; ++sweep) {
            for (std::size_t j = std::max<std::size_t>(first, 1); j <= end; ++j) g[j] = eval.at(j, u[j], g[j]);
            if (k == 0) g[0] = eval.origin(u[0], g[0], g[1], g[2]);

            double r = 0.0;
            for (std::size_t j = first; j <= end; ++j) {
                next[j] = seed + block.history(j) + block.dot(j, g);
                r = std::max(r, std::abs(next[j] - u[j]));
            }
            std::copy(next.begin() + static_cast<std::ptrdiff_t>(first),
                      next.begin() + static_cast<std::ptrdiff_t>(end + 1), u.begin() + static_cast<std::ptrdiff_t>(first));
            rep.residuals.push_back(r);
            if (r <= cfg.picard_tol) {
                converged = true;
                break;
            }
        }
        if (!converged) {
            reports.push_back(rep);
            std::ostringstream os;
            os << "Picard iteration on piece " << k << " [" << rep.t_begin << ", " << rep.t_end
               << "] did not reach tolerance " << cfg.picard_tol << " in " << cfg.picard_max_iters
               << " sweeps (last residual " << rep.residuals.back() << ")";
            throw NonConvergenceError(os.str(), partial_report(rep.residuals.back()));
        }

        // F of the accepted iterate; frozen for later pieces.
        for (std::size_t j = std::max<std::size_t>(first, 1); j <= end; ++j) g[j] = eval.at(j, u[j], g[j]);
        if (k == 0) g[0] = eval.origin(u[0], g[0], g[1], g[2]);

        if (rep.eta < 1.0 && certificate) {
            certificate = std::max(*certificate, rep.eta / (1.0 - rep.eta) * rep.residuals.back());
        } else {
            certificate.reset();
        }
        reports.push_back(std::move(rep));
    }

    WeightedGridFunction sol(mesh, mu, std::move(u));
    WeightedGridFunction rhs(mesh, mu, std::move(g));
    const double residual = volterra_residual(problem, sol, rhs);
    return SolveReport{std::move(sol), std::move(rhs), std::move(part), std::move(reports), residual, certificate};
}

}  // namespace hilfer
