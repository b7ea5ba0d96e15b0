#include "hilfer/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "hilfer/error.hpp"
#include "hilfer/special_functions.hpp"

namespace hilfer {

namespace {

constexpr std::size_t kFirstPanelPoints = 16;
constexpr std::size_t kPanelPoints = 8;
// Panels with w_{i+1} / w_i above this ratio see too much curvature in x^(-mu)
// for linear interpolation of H.
// Below this panel-to-distance ratio the first moment is summed as a series;
// the closed form cancels like 1/rho there.
constexpr double kSeriesRatio = 1e-3;

// A^p - (A - h)^p without cancellation, rho = h / A in (0, 1].
double power_difference(double A, double rho, double p) {
    return -std::pow(A, p) * std::expm1(p * std::log1p(-rho));
}

// int_0^h (A - s)^(alpha - 1) ds
double moment0(double A, double h, double alpha) { return power_difference(A, h / A, alpha) / alpha; }

// int_0^h (A - s)^(alpha - 1) s ds
double moment1(double A, double h, double alpha) {
    const double rho = h / A;
    if (rho < kSeriesRatio) {
        double c = 1.0;
        double rn = 1.0;
        double sum = 0.5;
        for (int n = 1; n < 60; ++n) {
            c *= (n - alpha) / n;
            rn *= rho;
            const double term = c * rn / (n + 2);
            sum += term;
            if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
        }
        return std::pow(A, alpha - 1.0) * h * h * sum;
    }
    return A * power_difference(A, rho, alpha) / alpha - power_difference(A, rho, alpha + 1.0) / (alpha + 1.0);
}

}  // namespace

GaussRule gauss_jacobi(std::size_t n, double p, double q) {
    require(n >= 1 && p > -1.0 && q > -1.0, ErrorCode::InvalidArgument,
            "Gauss-Jacobi rule needs n >= 1 and exponents > -1");
    // Jacobi weight (1 - x)^a (1 + x)^b on [-1, 1], mapped to y = (1 + x) / 2.
    const double a = p;
    const double b = q;
    Eigen::VectorXd diag(static_cast<Eigen::Index>(n));
    Eigen::VectorXd sub(static_cast<Eigen::Index>(n > 1 ? n - 1 : 0));
    diag[0] = (b - a) / (a + b + 2.0);
    for (std::size_t k = 1; k < n; ++k) {
        const double kk = static_cast<double>(k);
        const double s = 2.0 * kk + a + b;
        diag[static_cast<Eigen::Index>(k)] = (b * b - a * a) / (s * (s + 2.0));
        sub[static_cast<Eigen::Index>(k - 1)] =
            std::sqrt(4.0 * kk * (kk + a) * (kk + b) * (kk + a + b) / (s * s * (s + 1.0) * (s - 1.0)));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    require(es.info() == Eigen::Success, ErrorCode::ConvergenceError, "Gauss-Jacobi eigenproblem failed");

    const double mass = beta_fn(p + 1.0, q + 1.0);
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto kk = static_cast<Eigen::Index>(k);
        const double v0 = es.eigenvectors()(0, kk);
        rule.nodes[k] = 0.5 * (1.0 + es.eigenvalues()[kk]);
        rule.weights[k] = mass * v0 * v0;
    }
    return rule;
}

ProductIntegrator::ProductIntegrator(MeshPtr mesh, double alpha, double mu, double log_scale)
    : mesh_(std::move(mesh)), alpha_(alpha), mu_(mu) {
    require(mesh_ != nullptr, ErrorCode::InvalidArgument, "integrator needs a mesh");
    if (!(alpha_ > 0.0)) {
        std::ostringstream os;
        os << "fractional integral order must be positive (got " << alpha_ << ")";
        fail(ErrorCode::DomainError, os.str());
    }
    if (!(mu_ > -1.0 && mu_ < 1.0)) {
        std::ostringstream os;
        os << "input weight exponent must lie in (-1, 1) (got " << mu_ << ")";
        fail(ErrorCode::WeightTooSingular, os.str());
    }
    inv_gamma_ = log_scale == 0.0 && alpha_ < 171.0 ? 1.0 / gamma_fn(alpha_) : std::exp(log_scale - log_gamma(alpha_));
    const auto W = mesh_->offsets();
    if (mu_ != 0.0) {
        first_panel_rule_ = gauss_jacobi(kFirstPanelPoints, 0.0, -mu_);
        legendre_ = gauss_jacobi(kPanelPoints, 0.0, 0.0);
        end_singular_ = gauss_jacobi(kPanelPoints, alpha_ - 1.0, 0.0);
        node_pow_.assign(W.size() * kPanelPoints, 0.0);
        for (std::size_t i = 1; i + 1 < W.size(); ++i) {
            for (std::size_t n = 0; n < kPanelPoints; ++n) {
                node_pow_[i * kPanelPoints + n] = std::pow(W[i] + (W[i + 1] - W[i]) * legendre_.nodes[n], -mu_);
            }
        }
    }
}

void ProductIntegrator::row(std::size_t j, std::span<double> coeffs) const {
    std::fill(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(j + 1), 0.0);
    if (j == 0) return;

    const auto W = mesh_->offsets();
    const double wj = W[j];
    const bool weighted = mu_ != 0.0;

    std::size_t first_regular = 0;
    if (weighted) {
        first_regular = 1;
        const double h = W[1];
        if (j == 1) {
            const double f = std::pow(h, alpha_ - mu_);
            coeffs[0] += f * beta_fn(1.0 - mu_, alpha_ + 1.0);
            coeffs[1] += f * beta_fn(2.0 - mu_, alpha_);
        } else {
            double c0 = 0.0;
            double c1 = 0.0;
            const auto& rule = first_panel_rule_;
            for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
                const double tau = rule.nodes[k];
                const double kern = rule.weights[k] * std::pow(wj - h * tau, alpha_ - 1.0);
                c0 += kern * (1.0 - tau);
                c1 += kern * tau;
            }
            const double f = std::pow(h, 1.0 - mu_);
            coeffs[0] += f * c0;
            coeffs[1] += f * c1;
        }
    }

    for (std::size_t i = first_regular; i < j; ++i) {
        const double h = W[i + 1] - W[i];
        if (weighted) {
            // int (w_j - x)^(alpha-1) x^(-mu) [v_i (w_{i+1} - x) + v_{i+1} (x - w_i)] / h dx
            // over geometric sub-panels [x_k, x_{k+1}] with ratio <= 2.
            const double q = W[i + 1] / W[i];
            const int m = std::max(1, static_cast<int>(std::ceil(std::log2(q))));
            double cl = 0.0;
            double cr = 0.0;
            double x0 = W[i];
            for (int k = 0; k < m; ++k) {
                const double x1 = k + 1 == m ? W[i + 1] : W[i] * std::pow(q, static_cast<double>(k + 1) / m);
                const double d = x1 - x0;
                const bool singular = i + 1 == j && k + 1 == m;
                const bool cached = m == 1 && !singular;
                const GaussRule& rule = singular ? end_singular_ : legendre_;
                const double f = singular ? std::pow(d, alpha_) : d;
                for (std::size_t n = 0; n < rule.nodes.size(); ++n) {
                    const double x = x0 + d * rule.nodes[n];
                    double wt = f * rule.weights[n] * (cached ? node_pow_[i * kPanelPoints + n] : std::pow(x, -mu_));
                    if (!singular) wt *= std::pow(wj - x, alpha_ - 1.0);
                    cl += wt * (W[i + 1] - x);
                    cr += wt * (x - W[i]);
                }
                x0 = x1;
            }
            coeffs[i] += cl / h;
            coeffs[i + 1] += cr / h;
        } else {
            const double A = wj - W[i];
            const double m0 = moment0(A, h, alpha_);
            const double m1 = moment1(A, h, alpha_);
            const double right = m1 / h;
            coeffs[i] += m0 - right;
            coeffs[i + 1] += right;
        }
    }

    const double out_scale = (weighted ? std::pow(wj, mu_) : 1.0) * inv_gamma_;
    for (std::size_t i = 0; i <= j; ++i) coeffs[i] *= out_scale;
}

std::vector<double> ProductIntegrator::apply(std::span<const double> v) const {
    const std::size_t n = mesh_->size();
    require(v.size() == n, ErrorCode::MeshMismatch, "value count does not match integrator mesh");
    std::vector<double> out(n, 0.0);
    std::vector<double> c(n);
    for (std::size_t j = 1; j < n; ++j) {
        row(j, c);
        double s = 0.0;
        for (std::size_t i = 0; i <= j; ++i) s += c[i] * v[i];
        out[j] = s;
    }
    return out;
}

ConvolutionBlock::ConvolutionBlock(const ProductIntegrator& integrator, std::size_t first_row, std::size_t last_row,
                                   std::size_t first_col, std::span<const double> frozen)
    : first_row_(first_row), last_row_(last_row), first_col_(first_col) {
    const std::size_t n = integrator.mesh().size();
    require(first_row <= last_row && last_row < n && first_col <= first_row, ErrorCode::InvalidArgument,
            "convolution block indices out of range");
    require(first_col == 0 || frozen.size() >= first_col, ErrorCode::InvalidArgument,
            "frozen history values missing");

    const std::size_t rows = last_row - first_row + 1;
    offsets_.resize(rows + 1);
    offsets_[0] = 0;
    for (std::size_t r = 0; r < rows; ++r) offsets_[r + 1] = offsets_[r] + (first_row + r + 1 - first_col);
    coeffs_.resize(offsets_.back());
    history_.assign(rows, 0.0);

    std::vector<double> c(n);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::size_t j = first_row + r;
        integrator.row(j, c);
        double h = 0.0;
        for (std::size_t i = 0; i < first_col; ++i) h += c[i] * frozen[i];
        history_[r] = h;
        std::copy(c.begin() + static_cast<std::ptrdiff_t>(first_col), c.begin() + static_cast<std::ptrdiff_t>(j + 1),
                  coeffs_.begin() + static_cast<std::ptrdiff_t>(offsets_[r]));
    }
}

double ConvolutionBlock::dot(std::size_t j, std::span<const double> v) const {
    const std::size_t r = j - first_row_;
    const double* c = coeffs_.data() + offsets_[r];
    double s = 0.0;
    for (std::size_t i = first_col_; i <= j; ++i) s += c[i - first_col_] * v[i];
    return s;
}

}  // namespace hilfer
