#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hilfer/mesh.hpp"

namespace hilfer {

/// Nodes and weights of a fixed quadrature rule on [0, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Jacobi rule for int_0^1 (1 - y)^p y^q f(y) dy, p, q > -1
/// (Golub-Welsch on the Jacobi recurrence).
GaussRule gauss_jacobi(std::size_t n, double p, double q);

/// Weights of the product-trapezoidal fractional integral on a mesh.
///
/// In the variable x = psi(s) the integral of order alpha becomes
///   (1/Gamma(alpha)) int_0^{w_j} (w_j - x)^(alpha - 1) H(x) dx.
/// For unweighted inputs H is taken piecewise linear between nodes and the
/// kernel factor is integrated exactly on every panel. For inputs carrying a
/// weight mu != 0 the integrand is x^(-mu) times the linear interpolant of the
/// weighted values: the first panel in closed form (target node 1) or by a
/// 16-point Gauss-Jacobi rule, the other panels by 8-point Gauss rules on
/// geometric sub-panels of ratio <= 2 (Gauss-Jacobi next to the kernel
/// singularity). Weighted inputs that are linear in w are integrated exactly.
///
/// The coefficients act on weighted values and produce the weighted output
/// (same exponent mu). All coefficients are nonnegative.
class ProductIntegrator {
public:
    /// Coefficients are additionally multiplied by exp(log_scale), which keeps
    /// c^k I^{alpha k} representable when c^k and 1/Gamma(alpha k) are not.
    ProductIntegrator(MeshPtr mesh, double alpha, double mu, double log_scale = 0.0);

    [[nodiscard]] const GradedMesh& mesh() const noexcept { return *mesh_; }
    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] double weight_exponent() const noexcept { return mu_; }

    /// Coefficients c_{j,0..j} with out_j = sum_i c_{j,i} v_i; coeffs.size() must be >= j + 1.
    /// Row 0 is empty (the integral vanishes at t = a).
    void row(std::size_t j, std::span<double> coeffs) const;

    /// Weighted I^alpha applied to weighted values v on every node.
    [[nodiscard]] std::vector<double> apply(std::span<const double> v) const;

private:
    MeshPtr mesh_;
    double alpha_;
    double mu_;
    double inv_gamma_;
    GaussRule first_panel_rule_;
    GaussRule legendre_;
    GaussRule end_singular_;  // weight (1 - y)^(alpha - 1)
    std::vector<double> node_pow_;  // x^(-mu) at the Gauss nodes of each panel
};

/// Rows [first_row, last_row] of a ProductIntegrator restricted to columns
/// >= first_col, stored packed. Used when the same block is applied many
/// times (Picard sweeps on one subinterval). Columns below first_col hold
/// frozen values; their contribution is folded into a per-row history term.
class ConvolutionBlock {
public:
    /// frozen: global weighted values, only entries below first_col are read.
    /// May be empty when first_col == 0.
    ConvolutionBlock(const ProductIntegrator& integrator, std::size_t first_row, std::size_t last_row,
                     std::size_t first_col, std::span<const double> frozen = {});

    [[nodiscard]] std::size_t first_row() const noexcept { return first_row_; }
    [[nodiscard]] std::size_t last_row() const noexcept { return last_row_; }
    [[nodiscard]] std::size_t first_col() const noexcept { return first_col_; }

    /// sum_{first_col <= i <= j} c_{j,i} v_i, where v is indexed globally.
    [[nodiscard]] double dot(std::size_t j, std::span<const double> v) const;

    /// sum_{i < first_col} c_{j,i} frozen_i for row j of the block.
    [[nodiscard]] double history(std::size_t j) const { return history_[j - first_row_]; }

private:
    std::size_t first_row_;
    std::size_t last_row_;
    std::size_t first_col_;
    std::vector<std::size_t> offsets_;
    std::vector<double> coeffs_;
    std::vector<double> history_;
};

}  // namespace hilfer
