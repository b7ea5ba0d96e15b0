#include "hilfer/problem.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "hilfer/error.hpp"
#include "hilfer/special_functions.hpp"

namespace hilfer {

namespace {

double power_of(double w, double e) {
    if (e == 0.0) return 1.0;
    return std::pow(w, e);
}

void check_count(std::string_view kind, const std::vector<double>& params, std::size_t lo, std::size_t hi) {
    if (params.size() < lo || params.size() > hi) {
        std::ostringstream os;
        os << kind << " takes ";
        if (lo == hi) {
            os << lo;
        } else {
            os << lo << " to " << hi;
        }
        os << " parameter(s), got " << params.size();
        fail(ErrorCode::InvalidArgument, os.str());
    }
}

}  // namespace

std::string_view to_string(RhsKind kind) noexcept {
    switch (kind) {
        case RhsKind::PowerSource: return "power_source";
        case RhsKind::LinearInU: return "linear_in_u";
        case RhsKind::ImplicitContraction: return "implicit_contraction";
        case RhsKind::Example5: return "example5";
        case RhsKind::CustomCallback: return "custom_callback";
    }
    return "unknown";
}

RhsSpec::RhsSpec(RhsKind kind, std::vector<double> params, Fn fn, double M, double Mstar, OriginFn origin)
    : kind_(kind), params_(std::move(params)), fn_(std::move(fn)), M_(M), Mstar_(Mstar), origin_(std::move(origin)) {}

RhsSpec RhsSpec::power_source(double c, double delta) {
    require(std::isfinite(c), ErrorCode::InvalidArgument, "power_source coefficient must be finite");
    require(delta > 0.0 && std::isfinite(delta), ErrorCode::InvalidArgument, "power_source needs delta > 0");
    auto fn = [c, delta](double, double w, double, double) { return c * power_of(w, delta - 1.0); };
    return {RhsKind::PowerSource, {c, delta}, fn, 0.0, 0.0, {}};
}

RhsSpec RhsSpec::linear_in_u(double lambda) {
    require(std::isfinite(lambda), ErrorCode::InvalidArgument, "linear_in_u coefficient must be finite");
    auto fn = [lambda](double, double, double u, double) { return lambda * u; };
    return {RhsKind::LinearInU, {lambda}, fn, std::abs(lambda), 0.0, {}};
}

RhsSpec RhsSpec::implicit_contraction(double c, double g0, double delta) {
    require(std::abs(c) < 1.0, ErrorCode::InvalidArgument, "implicit_contraction needs |c| < 1");
    require(std::isfinite(g0), ErrorCode::InvalidArgument, "implicit_contraction source must be finite");
    require(delta > 0.0 && std::isfinite(delta), ErrorCode::InvalidArgument, "implicit_contraction needs delta > 0");
    auto fn = [c, g0, delta](double, double w, double, double d) { return g0 * power_of(w, delta - 1.0) + c * d; };
    return {RhsKind::ImplicitContraction, {c, g0, delta}, fn, 0.0, std::abs(c), {}};
}

RhsSpec RhsSpec::example5() {
    auto fn = [](double t, double, double u, double d) {
        return 1.0 / ((1.0 + 9.0 * std::exp(t)) * (1.0 + std::abs(u) + std::abs(d)));
    };
    return {RhsKind::Example5, {}, fn, 0.1, 0.1, {}};
}

RhsSpec RhsSpec::custom(Fn f, double M, double Mstar, OriginFn origin) {
    require(static_cast<bool>(f), ErrorCode::InvalidArgument, "custom right-hand side needs a callable");
    return {RhsKind::CustomCallback, {}, std::move(f), M, Mstar, std::move(origin)};
}

RhsSpec RhsSpec::from_name(std::string_view kind, const std::vector<double>& params) {
    if (kind == "power_source") {
        check_count(kind, params, 2, 2);
        return power_source(params[0], params[1]);
    }
    if (kind == "linear_in_u") {
        check_count(kind, params, 1, 1);
        return linear_in_u(params[0]);
    }
    if (kind == "implicit_contraction") {
        check_count(kind, params, 2, 3);
        return implicit_contraction(params[0], params[1], params.size() == 3 ? params[2] : 1.0);
    }
    if (kind == "example5") {
        check_count(kind, params, 0, 0);
        return example5();
    }
    std::ostringstream os;
    os << "unknown rhs kind '" << kind << "'";
    fail(ErrorCode::InvalidArgument, os.str());
}

double RhsSpec::max_gamma() const noexcept {
    switch (kind_) {
        case RhsKind::PowerSource: return params_[1];
        case RhsKind::ImplicitContraction: return params_[2];
        default: return std::numeric_limits<double>::infinity();
    }
}

std::optional<double> RhsSpec::weighted_origin(double mu, double weighted_u0) const {
    const double gamma = 1.0 - mu;
    switch (kind_) {
        case RhsKind::PowerSource: return params_[1] == gamma ? params_[0] : 0.0;
        case RhsKind::LinearInU: return params_[0] * weighted_u0;
        case RhsKind::ImplicitContraction:
            return params_[2] == gamma ? params_[1] / (1.0 - params_[0]) : 0.0;
        case RhsKind::Example5: return 0.0;
        case RhsKind::CustomCallback:
            if (origin_) return origin_(mu, weighted_u0);
            return std::nullopt;
    }
    return std::nullopt;
}

ProblemSpec::ProblemSpec(PsiKernel kernel, FractionalOrder order, double u_a, RhsSpec rhs)
    : ProblemSpec(std::move(kernel), order, u_a, rhs, rhs.lipschitz_M(), rhs.lipschitz_Mstar()) {}

ProblemSpec::ProblemSpec(PsiKernel kernel, FractionalOrder order, double u_a, RhsSpec rhs, double M, double Mstar)
    : kernel_(std::move(kernel)), order_(order), u_a_(u_a), rhs_(std::move(rhs)), M_(M), Mstar_(Mstar) {
    require(std::isfinite(u_a_), ErrorCode::InvalidArgument, "initial value u_a must be finite");
    if (!(M_ >= 0.0 && std::isfinite(M_))) {
        std::ostringstream os;
        os << "Lipschitz constant M must be finite and >= 0 (got " << M_ << ")";
        fail(ErrorCode::InvalidArgument, os.str());
    }
    if (!(Mstar_ >= 0.0 && Mstar_ < 1.0)) {
        std::ostringstream os;
        os << "Lipschitz constant M* must satisfy 0 <= M* < 1 (got " << Mstar_ << ")";
        fail(ErrorCode::InvalidArgument, os.str());
    }
    if (rhs_.max_gamma() < order_.gamma()) {
        std::ostringstream os;
        os << to_string(rhs_.kind()) << " source w^(delta-1) with delta = " << rhs_.max_gamma()
           << " is too singular for gamma = " << order_.gamma() << " (need delta >= gamma)";
        fail(ErrorCode::InvalidArgument, os.str());
    }
}

double ProblemSpec::seed_value() const { return u_a_ / gamma_fn(order_.gamma()); }

ProblemSpec ProblemSpec::with_initial_value(double u_a) const {
    return {kernel_, order_, u_a, rhs_, M_, Mstar_};
}

ProblemSpec ProblemSpec::with_order(FractionalOrder order) const {
    return {kernel_, order, u_a_, rhs_, M_, Mstar_};
}

}  // namespace hilfer
