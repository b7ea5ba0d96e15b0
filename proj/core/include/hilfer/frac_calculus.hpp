#pragma once

#include <cstddef>

#include "hilfer/grid_function.hpp"
#include "hilfer/mesh.hpp"
#include "hilfer/order.hpp"

namespace hilfer {

/// psi-Riemann-Liouville integral I^{alpha;psi} of order alpha > 0 on a mesh.
class FracIntegralOperator {
public:
    FracIntegralOperator(MeshPtr mesh, double alpha);

    [[nodiscard]] const MeshPtr& mesh_ptr() const noexcept { return mesh_; }
    [[nodiscard]] const PsiKernel& kernel() const noexcept { return mesh_->kernel(); }
    [[nodiscard]] double alpha() const noexcept { return alpha_; }

private:
    MeshPtr mesh_;
    double alpha_;
};

/// (I^{alpha;psi} h)(t_j) on every node, in the weight exponent of h.
/// Throws MeshMismatch if h lives on another grid.
WeightedGridFunction frac_integral(const FracIntegralOperator& op, const WeightedGridFunction& h);

/// Same integral returned in weight out_mu >= mu - alpha. With out_mu = mu - alpha
/// the value at t = a is the exact limit v_0 Gamma(1 - mu) / Gamma(1 - mu + alpha).
WeightedGridFunction frac_integral(const FracIntegralOperator& op, const WeightedGridFunction& h, double out_mu);

/// Gamma(delta) / Gamma(delta + alpha) (psi(t) - psi(a))^(alpha + delta - 1), the exact
/// integral of order alpha >= 0 of (psi - psi(a))^(delta - 1). Throws DomainError for
/// delta <= 0, alpha < 0 or t <= a.
double power_rule_exact(const PsiKernel& kernel, double alpha, double delta, double t);

/// psi-Riemann-Liouville derivative of order 0 < alpha < 1:
/// (1/psi') d/dt I^{1-alpha;psi} h, differentiated on the mesh (three-point
/// stencils in psi, one-sided at the ends). out_mu is the weight of the result.
WeightedGridFunction rl_derivative(double alpha, const WeightedGridFunction& h, double out_mu);

/// Hilfer derivative D^{alpha,beta;psi} = I^{beta(1-alpha);psi} D^{gamma;psi} for 0 < alpha < 1.
class HilferOperator {
public:
    HilferOperator(MeshPtr mesh, FractionalOrder order);

    [[nodiscard]] const MeshPtr& mesh_ptr() const noexcept { return mesh_; }
    [[nodiscard]] const PsiKernel& kernel() const noexcept { return mesh_->kernel(); }
    [[nodiscard]] const FractionalOrder& order() const noexcept { return order_; }

private:
    MeshPtr mesh_;
    FractionalOrder order_;
};

/// Hilfer derivative of h with result weight out_mu, evaluated as the
/// psi-Riemann-Liouville derivative minus its initial term,
///   D^{alpha,beta} h = D^alpha h - (I^{1-gamma} h)(a) w^{gamma-alpha-1} / Gamma(gamma-alpha).
/// h must carry a weight <= 1 - gamma. Less accurate than frac_integral (one
/// numerical differentiation); the two nodes after t = a and the last node
/// carry the largest error, and node 0 is extrapolated.
WeightedGridFunction hilfer_derivative(const HilferOperator& op, const WeightedGridFunction& h, double out_mu);

/// Same derivative taken literally as I^{beta(1-alpha)} applied to a numerical
/// D^{gamma} h (held with weight max(out_mu, 1 - alpha)). Differencing error at
/// the first nodes is carried forward by the integral, so this route is only
/// accurate when D^{gamma} h is smooth in the weighted sense.
WeightedGridFunction hilfer_derivative_composed(const HilferOperator& op, const WeightedGridFunction& h,
                                                double out_mu);

/// Max deviation between two grid functions and where it occurs.
struct DeviationReport {
    double max_deviation = 0.0;
    std::size_t worst_node = 0;
    double worst_t = 0.0;
};

/// Weighted max deviation of I^alpha I^beta h from I^{alpha+beta} h over all nodes.
DeviationReport check_semigroup(MeshPtr mesh, double alpha, double beta, const WeightedGridFunction& h);

/// D^{alpha,beta} I^alpha h against h on interior nodes 2 .. N-1. h must have weight 0.
DeviationReport check_left_inverse(MeshPtr mesh, const FractionalOrder& order, const WeightedGridFunction& h);

/// I^alpha D^{alpha,beta} h against h - u_a/Gamma(gamma) (psi - psi(a))^{gamma-1}
/// on interior nodes 2 .. N-1, where u_a = I^{1-gamma} h(a). h must have weight 1 - gamma.
DeviationReport check_thm_expansion(MeshPtr mesh, const FractionalOrder& order, const WeightedGridFunction& h,
                                    double u_a);

/// Interior-node deviation between two compatible grid functions (nodes 2 .. N-1).
DeviationReport interior_deviation(const WeightedGridFunction& lhs, const WeightedGridFunction& rhs);

}  // namespace hilfer
