#include "hilfer/frac_calculus.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include "hilfer/error.hpp"
#include "hilfer/quadrature.hpp"
#include "hilfer/special_functions.hpp"

namespace hilfer {

namespace {

constexpr double kWeightMatch = 1e-12;

void check_same_mesh(const MeshPtr& mesh, const WeightedGridFunction& h) {
    require(mesh->same_grid(h.mesh()), ErrorCode::MeshMismatch, "grid function is not on the operator mesh");
}

// I^order h keeping the weight of h; order 0 is the identity.
WeightedGridFunction integrate(const WeightedGridFunction& h, double order) {
    if (order == 0.0) return h;
    const ProductIntegrator integ(h.mesh_ptr(), order, h.weight_exponent());
    return {h.mesh_ptr(), h.weight_exponent(), integ.apply(h.values())};
}

// d g / dw at every node from unweighted values g_j (g_0 ignored when skip_origin).
std::vector<double> differentiate(const GradedMesh& mesh, const std::vector<double>& g, bool skip_origin) {
    const std::size_t n = mesh.size();
    const auto w = mesh.offsets();
    std::vector<double> d(n, 0.0);

    auto forward = [&](std::size_t j) {
        const double h1 = w[j + 1] - w[j];
        const double h2 = w[j + 2] - w[j + 1];
        return -(2.0 * h1 + h2) / (h1 * (h1 + h2)) * g[j] + (h1 + h2) / (h1 * h2) * g[j + 1] -
               h1 / (h2 * (h1 + h2)) * g[j + 2];
    };
    auto centered = [&](std::size_t j) {
        const double h1 = w[j] - w[j - 1];
        const double h2 = w[j + 1] - w[j];
        return -h2 / (h1 * (h1 + h2)) * g[j - 1] + (h2 - h1) / (h1 * h2) * g[j] + h1 / (h2 * (h1 + h2)) * g[j + 1];
    };
    auto backward = [&](std::size_t j) {
        const double h1 = w[j - 1] - w[j - 2];
        const double h2 = w[j] - w[j - 1];
        return h2 / (h1 * (h1 + h2)) * g[j - 2] - (h1 + h2) / (h1 * h2) * g[j - 1] +
               (h1 + 2.0 * h2) / (h2 * (h1 + h2)) * g[j];
    };

    // Values at nodes 0 and 1 carry the largest quadrature error, so node 2
    // is differenced forward.
    if (!skip_origin) d[0] = forward(0);
    d[1] = skip_origin ? forward(1) : centered(1);
    d[2] = n > 4 ? forward(2) : centered(2);
    for (std::size_t j = 3; j + 1 < n; ++j) d[j] = centered(j);
    d[n - 1] = backward(n - 1);
    return d;
}

// d/dpsi of g = I^nu h, returned unweighted at nodes j >= 1 (d[0] unused).
// The leading part v_0 w^(-mu) of h integrates to v_0 K w^(nu - mu); it is
// removed before differencing and differentiated exactly, which keeps the
// stencils accurate on the graded nodes next to t = a. The exact derivative
// of that part is returned separately as sing * w^(nu - mu - 1).
std::vector<double> psi_derivative(const WeightedGridFunction& h, double nu, double& sing) {
    const GradedMesh& mesh = h.mesh();
    const std::size_t n = mesh.size();
    const double mu = h.weight_exponent();
    const WeightedGridFunction G = integrate(h, nu);
    const double p = nu - mu;
    const double K = std::exp(log_gamma(1.0 - mu) - log_gamma(1.0 - mu + nu));
    const double lead = h[0] * K;

    std::vector<double> g(n, 0.0);
    for (std::size_t j = 1; j < n; ++j) {
        const double w = mesh.w(j);
        g[j] = G.unweighted(j) - (p == 0.0 ? lead : lead * std::pow(w, p));
    }
    sing = lead * p;
    return differentiate(mesh, g, mu > 0.0);
}

// Weighted result from unweighted values at j >= 1; node 0 extrapolated linearly in psi.
WeightedGridFunction weighted_result(const MeshPtr& mesh, std::vector<double> d, double out_mu) {
    for (std::size_t j = 1; j < d.size(); ++j) {
        if (out_mu != 0.0) d[j] *= std::pow(mesh->w(j), out_mu);
    }
    const double w1 = mesh->w(1);
    const double w2 = mesh->w(2);
    d[0] = d[1] - (d[2] - d[1]) * w1 / (w2 - w1);
    return {mesh, out_mu, std::move(d)};
}

void add_power(const GradedMesh& mesh, std::vector<double>& d, double coeff, double e) {
    if (coeff == 0.0) return;
    for (std::size_t j = 1; j < d.size(); ++j) d[j] += coeff * std::pow(mesh.w(j), e);
}

void check_weight(double mu) {
    if (!(mu >= 0.0 && mu < 1.0)) {
        std::ostringstream os;
        os << "result weight exponent must lie in [0, 1) (got " << mu << ")";
        fail(ErrorCode::WeightTooSingular, os.str());
    }
}

DeviationReport deviation(const WeightedGridFunction& lhs, const WeightedGridFunction& rhs, std::size_t first,
                          std::size_t last) {
    require(lhs.compatible(rhs), ErrorCode::MeshMismatch, "compared grid functions differ in mesh or weight");
    DeviationReport rep;
    rep.worst_node = first;
    rep.worst_t = lhs.mesh().t(first);
    for (std::size_t j = first; j < last; ++j) {
        const double e = std::abs(lhs[j] - rhs[j]);
        if (e > rep.max_deviation) {
            rep.max_deviation = e;
            rep.worst_node = j;
            rep.worst_t = lhs.mesh().t(j);
        }
    }
    return rep;
}

}  // namespace

FracIntegralOperator::FracIntegralOperator(MeshPtr mesh, double alpha) : mesh_(std::move(mesh)), alpha_(alpha) {
    require(mesh_ != nullptr, ErrorCode::InvalidArgument, "operator needs a mesh");
    if (!(alpha_ > 0.0 && std::isfinite(alpha_))) {
        std::ostringstream os;
        os << "integral order must be positive (got " << alpha_ << ")";
        fail(ErrorCode::DomainError, os.str());
    }
}

WeightedGridFunction frac_integral(const FracIntegralOperator& op, const WeightedGridFunction& h) {
    check_same_mesh(op.mesh_ptr(), h);
    return integrate(h, op.alpha());
}

WeightedGridFunction frac_integral(const FracIntegralOperator& op, const WeightedGridFunction& h, double out_mu) {
    const double mu = h.weight_exponent();
    const double floor_mu = mu - op.alpha();
    if (!(out_mu >= floor_mu - kWeightMatch) || !(out_mu > -1.0 && out_mu < 1.0)) {
        std::ostringstream os;
        os << "result weight " << out_mu << " must lie in [" << floor_mu << ", 1) and above -1";
        fail(ErrorCode::WeightTooSingular, os.str());
    }
    const WeightedGridFunction r = frac_integral(op, h);
    if (out_mu == mu) return r;
    const GradedMesh& mesh = h.mesh();
    std::vector<double> v(r.values().begin(), r.values().end());
    for (std::size_t j = 1; j < v.size(); ++j) v[j] *= std::pow(mesh.w(j), out_mu - mu);
    v[0] = std::abs(out_mu - floor_mu) <= kWeightMatch
               ? h[0] * std::exp(log_gamma(1.0 - mu) - log_gamma(1.0 - mu + op.alpha()))
               : 0.0;
    return {h.mesh_ptr(), out_mu, std::move(v)};
}

double power_rule_exact(const PsiKernel& kernel, double alpha, double delta, double t) {
    if (!(delta > 0.0) || !(alpha >= 0.0)) {
        std::ostringstream os;
        os << "power rule needs delta > 0 and alpha >= 0 (got alpha=" << alpha << ", delta=" << delta << ")";
        fail(ErrorCode::DomainError, os.str());
    }
    require(t > kernel.a(), ErrorCode::DomainError, "power rule is evaluated for t > a");
    const double w = kernel.offset(t);
    const double e = alpha + delta - 1.0;
    return std::exp(log_gamma(delta) - log_gamma(delta + alpha)) * (e == 0.0 ? 1.0 : std::pow(w, e));
}

WeightedGridFunction rl_derivative(double alpha, const WeightedGridFunction& h, double out_mu) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        std::ostringstream os;
        os << "derivative order must lie in (0, 1) (got " << alpha << ")";
        fail(ErrorCode::DomainError, os.str());
    }
    check_weight(out_mu);
    double sing = 0.0;
    std::vector<double> d = psi_derivative(h, 1.0 - alpha, sing);
    add_power(h.mesh(), d, sing, -alpha - h.weight_exponent());
    return weighted_result(h.mesh_ptr(), std::move(d), out_mu);
}

HilferOperator::HilferOperator(MeshPtr mesh, FractionalOrder order) : mesh_(std::move(mesh)), order_(order) {
    require(mesh_ != nullptr, ErrorCode::InvalidArgument, "operator needs a mesh");
}

WeightedGridFunction hilfer_derivative(const HilferOperator& op, const WeightedGridFunction& h, double out_mu) {
    check_same_mesh(op.mesh_ptr(), h);
    check_weight(out_mu);
    const FractionalOrder& ord = op.order();
    const double a = ord.alpha();
    const double g = ord.gamma();
    const double mu = h.weight_exponent();
    const bool seeded = std::abs(mu - (1.0 - g)) <= kWeightMatch;
    if (!seeded && mu > 1.0 - g) {
        std::ostringstream os;
        os << "weight " << mu << " is too singular for a Hilfer derivative with gamma = " << g;
        fail(ErrorCode::WeightTooSingular, os.str());
    }
    // D^{a,b} h = D^a h - (I^{1-g} h)(a) w^{g-a-1} / Gamma(g-a). I^{1-g} h(a) is
    // v_0 Gamma(g) when h carries exactly the weight 1 - g and 0 for milder weights.
    double sing = 0.0;
    std::vector<double> d = psi_derivative(h, 1.0 - a, sing);
    if (seeded) {
        // The exact part v_0 Gamma(g) / Gamma(g - a) w^{g-a-1} cancels the initial term.
    } else {
        add_power(h.mesh(), d, sing, -a - mu);
    }
    return weighted_result(h.mesh_ptr(), std::move(d), out_mu);
}

WeightedGridFunction hilfer_derivative_composed(const HilferOperator& op, const WeightedGridFunction& h,
                                                double out_mu) {
    check_same_mesh(op.mesh_ptr(), h);
    check_weight(out_mu);
    const FractionalOrder& ord = op.order();
    const double mid_mu = std::max(out_mu, 1.0 - ord.alpha());
    const double nu = 1.0 - ord.gamma();
    double sing = 0.0;
    std::vector<double> d;
    if (nu == 0.0) {
        // gamma = 1: plain derivative of h.
        const GradedMesh& mesh = h.mesh();
        std::vector<double> g(mesh.size(), 0.0);
        for (std::size_t j = h.weight_exponent() > 0.0 ? 1 : 0; j < mesh.size(); ++j) g[j] = h.unweighted(j);
        d = differentiate(mesh, g, h.weight_exponent() > 0.0);
    } else {
        d = psi_derivative(h, nu, sing);
        add_power(h.mesh(), d, sing, nu - h.weight_exponent() - 1.0);
    }
    const WeightedGridFunction dg = weighted_result(h.mesh_ptr(), std::move(d), mid_mu);
    return integrate(dg, ord.beta() * (1.0 - ord.alpha())).reweighted(out_mu);
}

DeviationReport interior_deviation(const WeightedGridFunction& lhs, const WeightedGridFunction& rhs) {
    require(lhs.size() >= 4, ErrorCode::InvalidArgument, "interior deviation needs at least 4 nodes");
    return deviation(lhs, rhs, 2, lhs.size() - 1);
}

DeviationReport check_semigroup(MeshPtr mesh, double alpha, double beta, const WeightedGridFunction& h) {
    require(alpha > 0.0 && beta > 0.0, ErrorCode::DomainError, "semigroup check needs positive orders");
    check_same_mesh(mesh, h);
    const WeightedGridFunction lhs = integrate(integrate(h, beta), alpha);
    const WeightedGridFunction rhs = integrate(h, alpha + beta);
    return deviation(lhs, rhs, 0, h.size());
}

DeviationReport check_left_inverse(MeshPtr mesh, const FractionalOrder& order, const WeightedGridFunction& h) {
    require(h.weight_exponent() == 0.0, ErrorCode::InvalidArgument, "left-inverse check needs a weight-0 function");
    const HilferOperator op(mesh, order);
    // I^alpha h behaves like w^alpha at t = a; weight -alpha keeps it smooth.
    const WeightedGridFunction ih = frac_integral(FracIntegralOperator(mesh, order.alpha()), h, -order.alpha());
    return interior_deviation(hilfer_derivative(op, ih, 0.0), h);
}

DeviationReport check_thm_expansion(MeshPtr mesh, const FractionalOrder& order, const WeightedGridFunction& h,
                                    double u_a) {
    const double mu = order.solution_weight();
    require(h.weight_exponent() == mu, ErrorCode::InvalidArgument, "expansion check needs weight 1 - gamma");
    const HilferOperator op(mesh, order);
    const WeightedGridFunction lhs =
        frac_integral(FracIntegralOperator(mesh, order.alpha()), hilfer_derivative(op, h, mu));
    std::vector<double> rhs(h.values().begin(), h.values().end());
    const double seed = u_a / gamma_fn(order.gamma());
    for (double& v : rhs) v -= seed;
    return interior_deviation(lhs, WeightedGridFunction(h.mesh_ptr(), mu, std::move(rhs)));
}

}  // namespace hilfer
