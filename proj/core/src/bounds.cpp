#include "hilfer/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "hilfer/error.hpp"
#include "hilfer/quadrature.hpp"
#include "hilfer/special_functions.hpp"

namespace hilfer {

namespace {

constexpr double kSeriesTol = 1e-14;

double max_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

bool all_equal(std::span<const double> v) {
    return std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
}

void fill_margins(DependenceReport& rep) {
    const std::size_t n = rep.diff.size();
    rep.margin.resize(n);
    rep.min_margin = n > 1 ? rep.bound[1] - rep.diff[1] : 0.0;
    rep.max_diff = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        rep.margin[j] = rep.bound[j] - rep.diff[j];
        if (j >= 1) {
            rep.min_margin = std::min(rep.min_margin, rep.margin[j]);
            rep.max_diff = std::max(rep.max_diff, rep.diff[j]);
        }
    }
}

}  // namespace

WeightedGridFunction series_envelope(const WeightedGridFunction& v, double nu, const std::vector<double>& c,
                                     int K_terms, int* terms_used) {
    require(K_terms >= 10, ErrorCode::InvalidArgument, "series cap K_terms must be at least 10");
    require(nu > 0.0, ErrorCode::DomainError, "series order must be positive");
    require(c.size() == 1 || c.size() == v.size(), ErrorCode::MeshMismatch,
            "series factor needs one value or one per node");
    for (double x : c) require(x >= 0.0 && std::isfinite(x), ErrorCode::InvalidArgument, "series factor must be >= 0");

    const std::size_t n = v.size();
    std::vector<double> sum(v.values().begin(), v.values().end());
    if (terms_used) *terms_used = 0;
    const double H = *std::max_element(c.begin(), c.end());
    if (H == 0.0) return {v.mesh_ptr(), v.weight_exponent(), std::move(sum)};

    const bool constant = c.size() == 1;
    std::vector<double> ratio(constant ? 0 : n);
    for (std::size_t j = 0; j < ratio.size(); ++j) ratio[j] = c[j] / H;

    int small_run = 0;
    for (int k = 1; k <= K_terms; ++k) {
        const ProductIntegrator integ(v.mesh_ptr(), nu * k, v.weight_exponent(), k * std::log(H));
        std::vector<double> term = integ.apply(v.values());
        if (!constant) {
            for (std::size_t j = 0; j < n; ++j) term[j] *= std::pow(ratio[j], k);
        }
        for (std::size_t j = 0; j < n; ++j) sum[j] += term[j];
        if (!std::all_of(sum.begin(), sum.end(), [](double x) { return std::isfinite(x); })) {
            fail(ErrorCode::SeriesCap, "envelope series overflowed");
        }
        if (max_abs(term) <= kSeriesTol * max_abs(sum)) {
            if (++small_run == 3) {
                if (terms_used) *terms_used = k;
                return {v.mesh_ptr(), v.weight_exponent(), std::move(sum)};
            }
        } else {
            small_run = 0;
        }
    }
    std::ostringstream os;
    os << "envelope series not converged after K_terms = " << K_terms << " terms";
    fail(ErrorCode::SeriesCap, os.str());
}

GronwallResult gronwall_envelope(const GronwallInput& inp, int K_terms) {
    require(inp.alpha > 0.0, ErrorCode::DomainError, "Gronwall order must be positive");
    for (double x : inp.v.values()) require(x >= 0.0, ErrorCode::InvalidArgument, "Gronwall v must be nonnegative");
    std::vector<double> c(inp.h);
    const double ga = gamma_fn(inp.alpha);
    for (double& x : c) {
        require(x >= 0.0, ErrorCode::InvalidArgument, "Gronwall h must be nonnegative");
        x *= ga;
    }
    int terms = 0;
    GronwallResult res{series_envelope(inp.v, inp.alpha, c, K_terms, &terms), terms, {}};

    if (inp.v.weight_exponent() == 0.0 && all_equal(inp.v.values()) && all_equal(c)) {
        const GradedMesh& mesh = inp.v.mesh();
        res.closed_form.resize(mesh.size());
        for (std::size_t j = 0; j < mesh.size(); ++j) {
            res.closed_form[j] = inp.v[0] * mittag_leffler(inp.alpha, c[0] * std::pow(mesh.w(j), inp.alpha));
        }
    }
    return res;
}

double order_dependence_A(double alpha, double beta, double u_a, const OrderPerturbation& pert, double w) {
    const double e = pert.epsilon;
    if (!(alpha > 0.0 && alpha <= 1.0) || !(beta >= 0.0 && beta <= 1.0) || !(e >= 0.0 && e < alpha)) {
        std::ostringstream os;
        os << "order perturbation needs 0 <= epsilon < alpha <= 1 and 0 <= beta <= 1 (alpha=" << alpha
           << ", beta=" << beta << ", epsilon=" << e << ")";
        fail(ErrorCode::DomainError, os.str());
    }
    require(w > 0.0, ErrorCode::DomainError, "A(t) is evaluated for t > a");
    const double g = alpha + beta - alpha * beta;
    const double gp = g + e * (beta - 1.0);
    const double ae = alpha - e;
    const double wae = std::pow(w, ae);
    const double cross = wae / (gamma_fn(ae) * gamma_fn(alpha));
    const double t1 = std::abs(pert.u_a_star * std::pow(w, gp - 1.0) / gamma_fn(gp) - u_a * std::pow(w, g - 1.0) / gamma_fn(g));
    const double t2 = pert.f_sup * std::abs(wae / gamma_fn(ae + 1.0) - cross);
    const double t3 = pert.f_sup * std::abs(cross - std::pow(w, alpha) / gamma_fn(alpha + 1.0));
    return t1 + t2 + t3;
}

double order_dependence_A(const ProblemSpec& problem, const OrderPerturbation& pert, double t) {
    require(t > problem.kernel().a(), ErrorCode::DomainError, "A(t) is evaluated for t > a");
    return order_dependence_A(problem.order().alpha(), problem.order().beta(), problem.u_a(), pert,
                              problem.kernel().offset(t));
}

WeightedGridFunction order_dependence_bound(const ProblemSpec& problem, const OrderPerturbation& pert, MeshPtr mesh,
                                            int K_terms) {
    const double alpha = problem.order().alpha();
    const double beta = problem.order().beta();
    const double g = problem.order().gamma();
    const double e = pert.epsilon;
    const double gp = g + e * (beta - 1.0);
    const double mu = 1.0 - gp;

    std::vector<double> A(mesh->size());
    for (std::size_t j = 1; j < A.size(); ++j) {
        const double w = mesh->w(j);
        A[j] = order_dependence_A(alpha, beta, problem.u_a(), pert, w) * std::pow(w, mu);
    }
    // Weighted limit at t = a: only the initial-value term survives.
    A[0] = gp < g ? std::abs(pert.u_a_star) / gamma_fn(gp) : std::abs(pert.u_a_star - problem.u_a()) / gamma_fn(g);

    const WeightedGridFunction Aw(mesh, mu, std::move(A));
    const double c = problem.lipschitz_M() * gamma_fn(alpha - e) / (gamma_fn(alpha) * (1.0 - problem.lipschitz_Mstar()));
    return series_envelope(Aw, alpha - e, {c}, K_terms);
}

double data_dependence_bound_weighted(const ProblemSpec& problem, const DataPerturbation& pert, double t) {
    const double w = problem.kernel().offset(t);
    const double a = problem.order().alpha();
    return std::abs(pert.delta) *
           mittag_leffler(a, problem.order().gamma(), problem.effective_lipschitz() * std::pow(w, a));
}

double data_dependence_bound(const ProblemSpec& problem, const DataPerturbation& pert, double t) {
    const double g = problem.order().gamma();
    if (g < 1.0) require(t > problem.kernel().a(), ErrorCode::DomainError, "data bound is singular at t = a");
    const double w = problem.kernel().offset(t);
    const double s = g == 1.0 ? 1.0 : std::pow(w, g - 1.0);
    return s * data_dependence_bound_weighted(problem, pert, t);
}

DependenceReport verify_dependence(const ProblemSpec& problem, const DataPerturbation& pert, const SolveConfig& cfg) {
    require(std::isfinite(pert.delta), ErrorCode::InvalidArgument, "delta must be finite");
    const ProblemSpec shifted = problem.with_initial_value(problem.u_a() + pert.delta);
    SolveReport base = solve_cauchy(problem, cfg);
    SolveReport pert_rep = solve_cauchy(shifted, cfg);
    const MeshPtr mesh = base.solution.mesh_ptr();
    require(mesh->same_grid(pert_rep.solution.mesh()), ErrorCode::MeshMismatch, "perturbed solve used another mesh");

    DependenceReport rep;
    rep.mode = DependenceMode::Data;
    rep.mesh = mesh;
    rep.weight = problem.order().solution_weight();
    const std::size_t n = mesh->size();
    rep.diff.resize(n);
    rep.bound.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        rep.diff[j] = std::abs(pert_rep.solution[j] - base.solution[j]);
        rep.bound[j] = data_dependence_bound_weighted(problem, pert, mesh->t(j));
    }
    fill_margins(rep);
    rep.base = std::make_shared<const SolveReport>(std::move(base));
    rep.perturbed = std::make_shared<const SolveReport>(std::move(pert_rep));
    return rep;
}

DependenceReport verify_dependence(const ProblemSpec& problem, const OrderPerturbation& pert, const SolveConfig& cfg,
                                   int K_terms) {
    const double alpha = problem.order().alpha();
    if (!(pert.epsilon >= 0.0 && pert.epsilon < alpha)) {
        std::ostringstream os;
        os << "order perturbation needs 0 <= epsilon < alpha (epsilon=" << pert.epsilon << ")";
        fail(ErrorCode::DomainError, os.str());
    }
    const ProblemSpec shifted =
        problem.with_order(FractionalOrder(alpha - pert.epsilon, problem.order().beta())).with_initial_value(pert.u_a_star);

    // Shared mesh: same grading and the union of both contraction partitions.
    SolveConfig c = cfg;
    if (c.grading_r == 0.0) c.grading_r = default_grading(shifted.order().gamma());
    const Partition p0 = partition_domain(problem, c);
    const Partition p1 = partition_domain(shifted, c);
    for (const Partition* p : {&p0, &p1}) {
        c.extra_breakpoints.insert(c.extra_breakpoints.end(), p->breakpoints.begin(), p->breakpoints.end());
    }

    SolveReport base = solve_cauchy(problem, c);
    SolveReport pert_rep = solve_cauchy(shifted, c);
    const MeshPtr mesh = base.solution.mesh_ptr();
    require(mesh->same_grid(pert_rep.solution.mesh()), ErrorCode::MeshMismatch, "perturbed solve used another mesh");

    OrderPerturbation measured = pert;
    measured.f_sup = 0.0;
    for (std::size_t j = 1; j < mesh->size(); ++j) measured.f_sup = std::max(measured.f_sup, std::abs(base.rhs_values.unweighted(j)));

    const double mu = shifted.order().solution_weight();
    const WeightedGridFunction u = base.solution.reweighted(mu);
    const WeightedGridFunction bound = order_dependence_bound(problem, measured, mesh, K_terms);

    DependenceReport rep;
    rep.mode = DependenceMode::Order;
    rep.mesh = mesh;
    rep.weight = mu;
    rep.diff.resize(mesh->size());
    for (std::size_t j = 0; j < mesh->size(); ++j) rep.diff[j] = std::abs(pert_rep.solution[j] - u[j]);
    rep.bound.assign(bound.values().begin(), bound.values().end());
    fill_margins(rep);
    rep.bound_not_tight = std::abs(1.0 / gamma_fn(alpha + 1.0) - 1.0 / (gamma_fn(alpha) * gamma_fn(alpha))) > 1e-12;
    rep.base = std::make_shared<const SolveReport>(std::move(base));
    rep.perturbed = std::make_shared<const SolveReport>(std::move(pert_rep));
    return rep;
}

std::vector<CatalogEntry> builtin_catalog() {
    std::vector<CatalogEntry> out;
    SolveConfig cfg;
    out.push_back({"example5",
                   ProblemSpec(builtin_kernel("sqrt_shift", 0.0, 1.0), FractionalOrder(0.5, 1.0 / 3.0), 1.0,
                               RhsSpec::example5()),
                   cfg});
    out.push_back({"linear",
                   ProblemSpec(builtin_kernel("linear", 0.0, 1.0), FractionalOrder(0.5, 1.0), 1.0,
                               RhsSpec::linear_in_u(0.5)),
                   cfg});
    out.push_back({"power_source",
                   ProblemSpec(builtin_kernel("linear", 0.0, 1.0), FractionalOrder(0.5, 0.5), 1.0,
                               RhsSpec::power_source(1.0, 1.0)),
                   cfg});
    out.push_back({"implicit_contraction",
                   ProblemSpec(builtin_kernel("exp", 0.0, 1.0), FractionalOrder(0.7, 0.2), 1.0,
                               RhsSpec::implicit_contraction(0.5, 1.0)),
                   cfg});
    SolveConfig multi = cfg;
    multi.mesh_N = 128;
    out.push_back({"linear_multi",
                   ProblemSpec(builtin_kernel("linear", 0.0, 1.0), FractionalOrder(0.6, 0.5), 1.0,
                               RhsSpec::linear_in_u(2.0)),
                   multi});
    return out;
}

}  // namespace hilfer
