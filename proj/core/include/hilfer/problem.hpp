#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hilfer/kernel.hpp"
#include "hilfer/order.hpp"

namespace hilfer {

enum class RhsKind { PowerSource, LinearInU, ImplicitContraction, Example5, CustomCallback };

std::string_view to_string(RhsKind kind) noexcept;

/// Right-hand side f(t, u, d) of the implicit problem, where d stands for the
/// Hilfer derivative of u at t. Builtin kinds carry their exact Lipschitz
/// constants M (in u) and M* (in d).
///
///   power_source          [c, delta]        f = c w^(delta - 1)
///   linear_in_u           [lambda]          f = lambda u
///   implicit_contraction  [c, g0, delta=1]  f = g0 w^(delta - 1) + c d
///   example5              []                f = 1 / ((1 + 9 e^t)(1 + |u| + |d|))
///
/// with w = psi(t) - psi(a).
class RhsSpec {
public:
    /// f(t, w, u, d)
    using Fn = std::function<double(double, double, double, double)>;
    /// Limit of w^mu f at t = a given mu > 0 and the weighted solution value there.
    using OriginFn = std::function<double(double, double)>;

    static RhsSpec power_source(double c, double delta);
    static RhsSpec linear_in_u(double lambda);
    static RhsSpec implicit_contraction(double c, double g0, double delta = 1.0);
    static RhsSpec example5();
    /// User-supplied f with declared constants. Without an origin function the
    /// weighted value at t = a is extrapolated from the first interior nodes.
    static RhsSpec custom(Fn f, double M, double Mstar, OriginFn origin = {});

    /// Builtin by name with a parameter list (the configuration-file form).
    static RhsSpec from_name(std::string_view kind, const std::vector<double>& params);

    [[nodiscard]] RhsKind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::vector<double>& params() const noexcept { return params_; }
    [[nodiscard]] double lipschitz_M() const noexcept { return M_; }
    [[nodiscard]] double lipschitz_Mstar() const noexcept { return Mstar_; }

    /// Largest gamma for which the source term w^(delta - 1) stays in the
    /// weighted space: delta for the power-type sources, infinity otherwise.
    [[nodiscard]] double max_gamma() const noexcept;

    [[nodiscard]] double operator()(double t, double w, double u, double d) const { return fn_(t, w, u, d); }

    /// Weighted value lim w^mu F at t = a for mu > 0, if known in closed form.
    [[nodiscard]] std::optional<double> weighted_origin(double mu, double weighted_u0) const;

private:
    RhsSpec(RhsKind kind, std::vector<double> params, Fn fn, double M, double Mstar, OriginFn origin);

    RhsKind kind_;
    std::vector<double> params_;
    Fn fn_;
    double M_;
    double Mstar_;
    OriginFn origin_;
};

/// Implicit Cauchy-type problem
///   D^{alpha,beta;psi} u(t) = f(t, u(t), D^{alpha,beta;psi} u(t)),  I^{1-gamma;psi} u(a) = u_a.
class ProblemSpec {
public:
    /// Lipschitz constants taken from the right-hand side.
    ProblemSpec(PsiKernel kernel, FractionalOrder order, double u_a, RhsSpec rhs);

    /// Explicit constants. Throws InvalidArgument unless M >= 0 and 0 <= M* < 1.
    ProblemSpec(PsiKernel kernel, FractionalOrder order, double u_a, RhsSpec rhs, double M, double Mstar);

    [[nodiscard]] const PsiKernel& kernel() const noexcept { return kernel_; }
    [[nodiscard]] const FractionalOrder& order() const noexcept { return order_; }
    [[nodiscard]] double u_a() const noexcept { return u_a_; }
    [[nodiscard]] const RhsSpec& rhs() const noexcept { return rhs_; }
    [[nodiscard]] double lipschitz_M() const noexcept { return M_; }
    [[nodiscard]] double lipschitz_Mstar() const noexcept { return Mstar_; }

    /// M / (1 - M*), the effective Lipschitz constant of u -> F_u.
    [[nodiscard]] double effective_lipschitz() const noexcept { return M_ / (1.0 - Mstar_); }

    /// Weighted seed value u_a / Gamma(gamma).
    [[nodiscard]] double seed_value() const;

    [[nodiscard]] ProblemSpec with_initial_value(double u_a) const;
    [[nodiscard]] ProblemSpec with_order(FractionalOrder order) const;

private:
    PsiKernel kernel_;
    FractionalOrder order_;
    double u_a_;
    RhsSpec rhs_;
    double M_;
    double Mstar_;
};

}  // namespace hilfer
