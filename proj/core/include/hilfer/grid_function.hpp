#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hilfer/mesh.hpp"

namespace hilfer {

/// Grid samples of u held in weighted form v_j = w_j^mu u(t_j), w = psi(t) - psi(a).
///
/// The weight removes the endpoint singularity of functions in C_{mu;psi}, so
/// every stored value is finite; v_0 is the limit of w^mu u at t = a. A
/// negative mu describes a function vanishing like w^(-mu) at t = a.
class WeightedGridFunction {
public:
    /// Takes weighted values directly. Throws if mu is outside (-1, 1), the size
    /// does not match the mesh, or a value is not finite.
    WeightedGridFunction(MeshPtr mesh, double mu, std::vector<double> weighted_values);

    /// Zero function.
    WeightedGridFunction(MeshPtr mesh, double mu);

    /// Samples fn(t, w) -> weighted value at every node (w = 0 at the first node).
    static WeightedGridFunction sample(MeshPtr mesh, double mu, const std::function<double(double, double)>& fn);

    /// Samples c * w^sigma in weight mu; needs sigma + mu >= 0 so the first node is finite.
    static WeightedGridFunction power(MeshPtr mesh, double mu, double coeff, double sigma);

    [[nodiscard]] const MeshPtr& mesh_ptr() const noexcept { return mesh_; }
    [[nodiscard]] const GradedMesh& mesh() const noexcept { return *mesh_; }
    [[nodiscard]] double weight_exponent() const noexcept { return mu_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] double operator[](std::size_t j) const { return values_[j]; }

    /// u(t_j) = v_j w_j^(-mu); valid for j >= 1, and for j = 0 when mu <= 0.
    [[nodiscard]] double unweighted(std::size_t j) const;

    /// Same function represented with another weight exponent. Raising the
    /// exponent sends the first node to 0; lowering it extrapolates the first
    /// node linearly in psi from nodes 1 and 2.
    [[nodiscard]] WeightedGridFunction reweighted(double new_mu) const;

    [[nodiscard]] bool compatible(const WeightedGridFunction& other) const noexcept;

    WeightedGridFunction& operator+=(const WeightedGridFunction& rhs);
    WeightedGridFunction& operator-=(const WeightedGridFunction& rhs);
    WeightedGridFunction& operator*=(double c);

private:
    MeshPtr mesh_;
    double mu_;
    std::vector<double> values_;
};

WeightedGridFunction operator+(WeightedGridFunction lhs, const WeightedGridFunction& rhs);
WeightedGridFunction operator-(WeightedGridFunction lhs, const WeightedGridFunction& rhs);
WeightedGridFunction operator*(double c, WeightedGridFunction f);

/// Discrete C_{mu;psi} norm: max_j |v_j|.
double weighted_sup_norm(const WeightedGridFunction& f);

/// max_j |v_j| over the index range [first, last).
double weighted_sup_norm(const WeightedGridFunction& f, std::size_t first, std::size_t last);

}  // namespace hilfer
