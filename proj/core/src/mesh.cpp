#include "hilfer/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "hilfer/error.hpp"

namespace hilfer {

namespace {

// Derivative spot checks are capped so very fine meshes stay cheap to build.
constexpr std::size_t kMaxDerivativeChecks = 64;

}  // namespace

GradedMesh::GradedMesh(const PsiKernel& kernel, std::vector<double> nodes, double r)
    : kernel_(kernel), nodes_(std::move(nodes)), grading_(r) {
    require(nodes_.size() >= 3, ErrorCode::InvalidArgument, "mesh needs at least 2 panels");
    require(nodes_.front() == kernel_.a() && nodes_.back() == kernel_.b(), ErrorCode::InvalidArgument,
            "mesh must span the kernel domain [a, b]");
    for (std::size_t j = 1; j < nodes_.size(); ++j) {
        require(nodes_[j] > nodes_[j - 1], ErrorCode::InvalidArgument, "mesh nodes must be strictly increasing");
    }

    const std::size_t n = nodes_.size();
    psi_.resize(n);
    w_.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        psi_[j] = kernel_.eval(nodes_[j]);
        w_[j] = j == 0 ? 0.0 : kernel_.offset(nodes_[j]);
        if (!std::isfinite(psi_[j]) || !std::isfinite(w_[j])) {
            std::ostringstream os;
            os << "kernel '" << kernel_.label() << "' is not finite at t=" << nodes_[j];
            fail(ErrorCode::InvalidKernel, os.str());
        }
    }

    for (std::size_t j = 0; j < n; ++j) {
        const double d = kernel_.deriv(nodes_[j]);
        if (!(d > 0.0)) {
            std::ostringstream os;
            os << "kernel '" << kernel_.label() << "' has psi'(" << nodes_[j] << ") = " << d << " <= 0";
            fail(ErrorCode::NonMonotoneKernel, os.str());
        }
        if (j > 0 && !(w_[j] > w_[j - 1])) {
            std::ostringstream os;
            os << "kernel '" << kernel_.label() << "' does not increase between t=" << nodes_[j - 1]
               << " and t=" << nodes_[j];
            fail(ErrorCode::NonMonotoneKernel, os.str());
        }
    }

    const std::size_t stride = std::max<std::size_t>(1, n / kMaxDerivativeChecks);
    for (std::size_t j = 0; j < n; j += stride) {
        if (!kernel_.derivative_consistent_at(nodes_[j])) {
            std::ostringstream os;
            os << "kernel '" << kernel_.label() << "' derivative disagrees with finite differences at t="
               << nodes_[j];
            fail(ErrorCode::InvalidKernel, os.str());
        }
    }
}

GradedMesh GradedMesh::graded(const PsiKernel& kernel, std::size_t panels, double r) {
    if (!(r >= 1.0) || !std::isfinite(r)) {
        std::ostringstream os;
        os << "grading exponent must satisfy r >= 1 (got " << r << ")";
        fail(ErrorCode::InvalidGrading, os.str());
    }
    require(panels >= 2, ErrorCode::InvalidArgument, "graded mesh needs at least 2 panels");

    const double a = kernel.a();
    const double b = kernel.b();
    std::vector<double> nodes(panels + 1);
    for (std::size_t j = 0; j <= panels; ++j) {
        const double s = static_cast<double>(j) / static_cast<double>(panels);
        nodes[j] = a + (b - a) * std::pow(s, r);
    }
    nodes.back() = b;
    return {kernel, std::move(nodes), r};
}

GradedMesh GradedMesh::from_nodes(const PsiKernel& kernel, std::vector<double> nodes, double r) {
    return {kernel, std::move(nodes), r};
}

std::size_t GradedMesh::index_of(double t) const noexcept {
    const auto it = std::lower_bound(nodes_.begin(), nodes_.end(), t);
    if (it == nodes_.end() || *it != t) return nodes_.size();
    return static_cast<std::size_t>(it - nodes_.begin());
}

bool GradedMesh::same_grid(const GradedMesh& other) const noexcept {
    return this == &other || (nodes_ == other.nodes_ && kernel_.label() == other.kernel_.label());
}

MeshPtr build_graded_mesh(const PsiKernel& kernel, std::size_t panels, double r) {
    return std::make_shared<const GradedMesh>(GradedMesh::graded(kernel, panels, r));
}

double default_grading(double gamma) { return std::max(1.0, 2.0 / gamma); }

}  // namespace hilfer
