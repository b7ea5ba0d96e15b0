#include "hilfer/kernel.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "hilfer/error.hpp"

namespace hilfer {

PsiKernel::PsiKernel(std::string label, Fn eval, Fn deriv, double a, double b)
    : label_(std::move(label)), eval_(std::move(eval)), deriv_(std::move(deriv)), a_(a), b_(b) {
    require(std::isfinite(a) && std::isfinite(b) && a < b, ErrorCode::InvalidArgument,
            "kernel domain requires finite a < b");
    require(static_cast<bool>(eval_) && static_cast<bool>(deriv_), ErrorCode::InvalidArgument,
            "kernel callbacks must be set");
}

PsiKernel::PsiKernel(std::string label, Fn eval, Fn deriv, Fn offset, double a, double b)
    : PsiKernel(std::move(label), std::move(eval), std::move(deriv), a, b) {
    offset_ = std::move(offset);
}

double PsiKernel::inverse(double x, double lo, double hi) const {
    if (eval_(hi) <= x) return hi;
    for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * std::abs(hi); ++it) {
        const double mid = 0.5 * (lo + hi);
        if (eval_(mid) <= x) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo;
}

bool PsiKernel::derivative_consistent_at(double t) const {
    const double h = 1e-5 * (b_ - a_);
    const double d = deriv_(t);
    double fd;
    if (t - h >= a_ && t + h <= b_) {
        fd = (eval_(t + h) - eval_(t - h)) / (2.0 * h);
    } else if (t - h < a_) {
        fd = (-3.0 * eval_(t) + 4.0 * eval_(t + h) - eval_(t + 2.0 * h)) / (2.0 * h);
    } else {
        fd = (3.0 * eval_(t) - 4.0 * eval_(t - h) + eval_(t - 2.0 * h)) / (2.0 * h);
    }
    return std::abs(fd - d) <= 1e-6 * (1.0 + std::abs(d));
}

PsiKernel builtin_kernel(std::string_view name, double a, double b) {
    if (name == "linear") {
        return {"linear", [](double t) { return t; }, [](double) { return 1.0; },
                [a](double t) { return t - a; }, a, b};
    }
    if (name == "sqrt_shift") {
        require(a > -1.0, ErrorCode::DomainError, "sqrt_shift kernel requires a > -1");
        return {"sqrt_shift", [](double t) { return std::sqrt(t + 1.0); },
                [](double t) { return 0.5 / std::sqrt(t + 1.0); },
                [a](double t) { return (t - a) / (std::sqrt(t + 1.0) + std::sqrt(a + 1.0)); }, a, b};
    }
    if (name == "exp") {
        return {"exp", [](double t) { return std::exp(t); }, [](double t) { return std::exp(t); },
                [a](double t) { return std::exp(a) * std::expm1(t - a); }, a, b};
    }
    fail(ErrorCode::UnknownKernel, "unknown kernel '" + std::string(name) + "'");
}

}  // namespace hilfer
