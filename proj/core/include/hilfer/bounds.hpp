#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hilfer/grid_function.hpp"
#include "hilfer/problem.hpp"
#include "hilfer/solver.hpp"

namespace hilfer {

/// Inputs of the generalized Gronwall inequality
///   u <= v + h(t) Gamma(alpha) I^alpha u  ==>  u <= v + sum_k (h(t) Gamma(alpha))^k I^{alpha k} v.
/// h is either a single constant (h.size() == 1) or one value per node.
struct GronwallInput {
    WeightedGridFunction v;
    std::vector<double> h;
    double alpha = 0.5;
};

struct GronwallResult {
    WeightedGridFunction envelope;  ///< same weight as v
    int terms = 0;                  ///< series terms used (k = 1 .. terms)
    /// v E_alpha(h Gamma(alpha) w^alpha) in the weight of v, filled when v and h are constant.
    std::vector<double> closed_form;
};

/// Evaluates the series form nodewise; the k-series stops after three
/// consecutive terms below 1e-14 of the running sum. Throws SeriesCap if
/// K_terms terms do not suffice, InvalidArgument for K_terms < 10 or negative data.
GronwallResult gronwall_envelope(const GronwallInput& inp, int K_terms = 2000);

/// v + sum_{k>=1} c_j^k I^{nu k} v with per-node factors c_j >= 0 (or one constant).
/// Shared by the Gronwall envelope and the order-dependence bound.
WeightedGridFunction series_envelope(const WeightedGridFunction& v, double nu, const std::vector<double>& c,
                                     int K_terms, int* terms_used = nullptr);

struct OrderPerturbation {
    double epsilon = 0.0;   ///< perturbed order alpha - epsilon
    double u_a_star = 0.0;  ///< initial value of the perturbed problem
    double f_sup = 0.0;     ///< max |f(t, u, F_u)| of the base solution
};

struct DataPerturbation {
    double delta = 0.0;  ///< perturbed initial value u_a + delta
};

/// A(t) of the order-dependence estimate, evaluated as written:
///   |u_a* w^{g'-1}/G(g') - u_a w^{g-1}/G(g)| + ||f|| |w^{a-e}/G(a-e+1) - w^{a-e}/(G(a-e)G(a))|
///   + ||f|| |w^{a-e}/(G(a-e)G(a)) - w^a/G(a+1)|,   g' = g + e(beta - 1).
/// Requires 0 <= e < alpha and t > a (DomainError otherwise).
double order_dependence_A(const ProblemSpec& problem, const OrderPerturbation& pert, double t);

/// Same with raw parameters; alpha may equal 1 here.
double order_dependence_A(double alpha, double beta, double u_a, const OrderPerturbation& pert, double w);

/// A + sum_k c^k I^{k(alpha-e)} A with c = M Gamma(alpha-e) / (Gamma(alpha)(1 - M*)),
/// in weight 1 - g' (node 0 holds the weighted limit).
WeightedGridFunction order_dependence_bound(const ProblemSpec& problem, const OrderPerturbation& pert, MeshPtr mesh,
                                            int K_terms = 2000);

/// |delta| w^{gamma-1} E_{alpha,gamma}(M/(1-M*) w^alpha) at t > a.
double data_dependence_bound(const ProblemSpec& problem, const DataPerturbation& pert, double t);

/// Weighted form |delta| E_{alpha,gamma}(M/(1-M*) w^alpha), finite at t = a.
double data_dependence_bound_weighted(const ProblemSpec& problem, const DataPerturbation& pert, double t);

enum class DependenceMode { Order, Data };

/// Nodewise comparison of a measured solution difference with a bound, both in
/// the weight `weight`. Margins are taken over interior nodes (j >= 1).
struct DependenceReport {
    DependenceMode mode = DependenceMode::Data;
    MeshPtr mesh;
    double weight = 0.0;
    std::vector<double> diff;
    std::vector<double> bound;
    std::vector<double> margin;
    double min_margin = 0.0;
    double max_diff = 0.0;
    /// Set in order mode when A(t) stays positive for matched data at e = 0
    /// (alpha != 1), so the bound cannot be tight.
    bool bound_not_tight = false;
    std::shared_ptr<const SolveReport> base;
    std::shared_ptr<const SolveReport> perturbed;
};

/// Solves base and perturbed problems on a shared mesh and compares.
DependenceReport verify_dependence(const ProblemSpec& problem, const DataPerturbation& pert, const SolveConfig& cfg);

/// Order mode. pert.f_sup is ignored and measured from the base solve.
DependenceReport verify_dependence(const ProblemSpec& problem, const OrderPerturbation& pert, const SolveConfig& cfg,
                                   int K_terms = 2000);

/// Named problems used by the acceptance suite and `hilfer verify`.
struct CatalogEntry {
    std::string name;
    ProblemSpec problem;
    SolveConfig config;
};

std::vector<CatalogEntry> builtin_catalog();

}  // namespace hilfer
