#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "hilfer/kernel.hpp"

namespace hilfer {

/// Strictly increasing time grid t_0 = a < ... < t_N = b with cached psi values.
///
/// The graded constructor clusters nodes at t = a, where solutions carry the
/// (psi(t) - psi(a))^(gamma - 1) singularity. Meshes are immutable and shared
/// between grid functions through MeshPtr.
class GradedMesh {
public:
    /// t_j = a + (b - a) (j / panels)^r.
    static GradedMesh graded(const PsiKernel& kernel, std::size_t panels, double r);

    /// Arbitrary strictly increasing nodes spanning [kernel.a(), kernel.b()].
    static GradedMesh from_nodes(const PsiKernel& kernel, std::vector<double> nodes, double r = 1.0);

    [[nodiscard]] const PsiKernel& kernel() const noexcept { return kernel_; }
    [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
    [[nodiscard]] std::size_t panels() const noexcept { return nodes_.size() - 1; }
    [[nodiscard]] double grading_exponent() const noexcept { return grading_; }

    [[nodiscard]] double t(std::size_t j) const { return nodes_[j]; }
    [[nodiscard]] double psi(std::size_t j) const { return psi_[j]; }
    /// w_j = psi(t_j) - psi(a); exactly zero at j = 0.
    [[nodiscard]] double w(std::size_t j) const { return w_[j]; }

    [[nodiscard]] std::span<const double> nodes() const noexcept { return nodes_; }
    [[nodiscard]] std::span<const double> psi_nodes() const noexcept { return psi_; }
    [[nodiscard]] std::span<const double> offsets() const noexcept { return w_; }

    /// Index of the node equal to t (exact match), or size() if absent.
    [[nodiscard]] std::size_t index_of(double t) const noexcept;

    [[nodiscard]] bool same_grid(const GradedMesh& other) const noexcept;

private:
    GradedMesh(const PsiKernel& kernel, std::vector<double> nodes, double r);

    PsiKernel kernel_;
    std::vector<double> nodes_;
    std::vector<double> psi_;
    std::vector<double> w_;
    double grading_;
};

using MeshPtr = std::shared_ptr<const GradedMesh>;

/// Graded mesh with panels >= 2 and r >= 1. Throws InvalidGrading for r < 1 and
/// NonMonotoneKernel if psi fails to increase on the nodes.
MeshPtr build_graded_mesh(const PsiKernel& kernel, std::size_t panels, double r);

/// Default grading exponent max(1, 2 / gamma).
double default_grading(double gamma);

}  // namespace hilfer
