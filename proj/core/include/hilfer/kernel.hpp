#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace hilfer {

/// Strictly increasing kernel function psi on [a, b] together with its derivative.
///
/// All fractional operators in the library are taken with respect to psi. The
/// kernel is cheap to copy (two callables and the endpoints).
class PsiKernel {
public:
    using Fn = std::function<double(double)>;

    PsiKernel(std::string label, Fn eval, Fn deriv, double a, double b);

    /// As above, with an accurate evaluator for psi(t) - psi(a) (avoids the
    /// cancellation of the plain difference when t is very close to a).
    PsiKernel(std::string label, Fn eval, Fn deriv, Fn offset, double a, double b);

    [[nodiscard]] double operator()(double t) const { return eval_(t); }
    [[nodiscard]] double eval(double t) const { return eval_(t); }
    [[nodiscard]] double deriv(double t) const { return deriv_(t); }
    [[nodiscard]] double a() const noexcept { return a_; }
    [[nodiscard]] double b() const noexcept { return b_; }
    [[nodiscard]] const std::string& label() const noexcept { return label_; }

    /// psi(t) - psi(a).
    [[nodiscard]] double offset(double t) const { return offset_ ? offset_(t) : eval_(t) - eval_(a_); }

    /// Solves psi(t) = x for t in [lo, hi] by bisection, returning the largest
    /// bracketing point with psi(t) <= x. Requires psi(lo) <= x.
    [[nodiscard]] double inverse(double x, double lo, double hi) const;

    /// Finite-difference consistency of eval and deriv at t:
    /// |FD(t) - psi'(t)| <= 1e-6 (1 + |psi'(t)|) with h = 1e-5 (b - a).
    [[nodiscard]] bool derivative_consistent_at(double t) const;

private:
    std::string label_;
    Fn eval_;
    Fn deriv_;
    Fn offset_;
    double a_;
    double b_;
};

/// Builtin kernels: "linear" (psi = t), "sqrt_shift" (psi = sqrt(t + 1)),
/// "exp" (psi = e^t). Throws UnknownKernel otherwise.
PsiKernel builtin_kernel(std::string_view name, double a, double b);

}  // namespace hilfer
