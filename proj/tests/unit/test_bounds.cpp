#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "hilfer/hilfer.hpp"

using namespace hilfer;

namespace {

MeshPtr unit_mesh(const char* kernel, std::size_t N, double r = 1.0) {
    return build_graded_mesh(builtin_kernel(kernel, 0.0, 1.0), N, r);
}

GronwallResult constant_gronwall(const MeshPtr& m, double alpha, double z, int K = 2000) {
    // h Gamma(alpha) w^alpha reaches z at w = 1 on the linear kernel.
    const double h = z / gamma_fn(alpha);
    return gronwall_envelope({WeightedGridFunction::power(m, 0.0, 1.0, 0.0), {h}, alpha}, K);
}

double max_rel(const GronwallResult& r) {
    double rel = 0.0;
    for (std::size_t j = 0; j < r.closed_form.size(); ++j) {
        rel = std::max(rel, std::abs(r.envelope[j] - r.closed_form[j]) / r.closed_form[j]);
    }
    return rel;
}

}  // namespace

TEST(Gronwall, SeriesMatchesMittagLeffler) {
    const MeshPtr m = unit_mesh("linear", 64);
    for (double alpha : {0.5, 0.9}) {
        for (double z : {1.0, 5.0, 10.0}) {
            const GronwallResult r = constant_gronwall(m, alpha, z);
            ASSERT_EQ(r.closed_form.size(), m->size());
            EXPECT_LT(max_rel(r), 1e-6) << alpha << " " << z;
            EXPECT_GT(r.terms, 3);
        }
    }
    EXPECT_LT(max_rel(constant_gronwall(m, 0.3, 5.0)), 1e-6);
}

TEST(Gronwall, UnitOrderIsExponential) {
    const MeshPtr m = unit_mesh("exp", 64, 1.0);
    const double h = 1.7;
    const GronwallResult r = gronwall_envelope({WeightedGridFunction::power(m, 0.0, 2.0, 0.0), {h}, 1.0});
    for (std::size_t j = 0; j < m->size(); ++j) EXPECT_NEAR(r.envelope[j] / (2.0 * std::exp(h * m->w(j))), 1.0, 1e-8);
}

TEST(Gronwall, OverflowIsReportedAsSeriesCap) {
    const MeshPtr m = unit_mesh("linear", 32);
    try {
        constant_gronwall(m, 0.3, 10.0);  // E_{0.3}(10) is about exp(2154)
        FAIL() << "expected SeriesCap";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SeriesCap);
    }
    try {
        constant_gronwall(m, 0.5, 10.0, 10);
        FAIL() << "expected SeriesCap";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SeriesCap);
    }
}

TEST(Gronwall, EnvelopeDominatesAndIsMonotoneInH) {
    const MeshPtr m = unit_mesh("sqrt_shift", 64, 2.0);
    const auto v = WeightedGridFunction::sample(m, 0.0, [](double t, double) { return 1.0 + std::sin(5.0 * t); });
    std::vector<double> small(m->size()), big(m->size());
    for (std::size_t j = 0; j < m->size(); ++j) {
        small[j] = 0.5 + m->t(j);
        big[j] = 2.0 * small[j];
    }
    const GronwallResult a = gronwall_envelope({v, small, 0.6});
    const GronwallResult b = gronwall_envelope({v, big, 0.6});
    EXPECT_TRUE(a.closed_form.empty());
    for (std::size_t j = 0; j < m->size(); ++j) {
        EXPECT_GE(a.envelope[j], v[j]);
        EXPECT_GE(b.envelope[j], a.envelope[j]);
    }
}

TEST(Gronwall, Errors) {
    const MeshPtr m = unit_mesh("linear", 16);
    const auto v = WeightedGridFunction::power(m, 0.0, 1.0, 0.0);
    EXPECT_THROW(gronwall_envelope({v, {-1.0}, 0.5}), Error);
    EXPECT_THROW(gronwall_envelope({v, {1.0}, 0.0}), Error);
    EXPECT_THROW(gronwall_envelope({v, {1.0, 2.0}, 0.5}), Error);
    EXPECT_THROW(gronwall_envelope({-1.0 * v, {1.0}, 0.5}), Error);
}

TEST(SeriesEnvelope, ZeroFactorReturnsInput) {
    const MeshPtr m = unit_mesh("linear", 16);
    const auto v = WeightedGridFunction::power(m, 0.3, 2.0, 0.1);
    int terms = -1;
    const auto out = series_envelope(v, 0.5, {0.0}, 100, &terms);
    EXPECT_EQ(terms, 0);
    for (std::size_t j = 0; j < m->size(); ++j) EXPECT_EQ(out[j], v[j]);
}

TEST(OrderDependenceA, HandComputedValue) {
    const double alpha = 0.5, beta = 0.5, eps = 0.1, u_a = 1.0, ua_star = 1.2, f_sup = 0.7, w = 0.64;
    const double g = alpha + beta - alpha * beta;
    const double gp = g + eps * (beta - 1.0);
    const double ae = alpha - eps;
    const double t1 = std::abs(ua_star * std::pow(w, gp - 1.0) / std::tgamma(gp) - u_a * std::pow(w, g - 1.0) / std::tgamma(g));
    const double cross = std::pow(w, ae) / (std::tgamma(ae) * std::tgamma(alpha));
    const double t2 = f_sup * std::abs(std::pow(w, ae) / std::tgamma(ae + 1.0) - cross);
    const double t3 = f_sup * std::abs(cross - std::pow(w, alpha) / std::tgamma(alpha + 1.0));
    EXPECT_NEAR(order_dependence_A(alpha, beta, u_a, {eps, ua_star, f_sup}, w), t1 + t2 + t3, 1e-13);
}

TEST(OrderDependenceA, DomainChecks) {
    EXPECT_THROW(order_dependence_A(0.5, 0.5, 1.0, {0.6, 1.0, 1.0}, 0.5), Error);
    EXPECT_THROW(order_dependence_A(0.5, 0.5, 1.0, {-0.1, 1.0, 1.0}, 0.5), Error);
    EXPECT_THROW(order_dependence_A(0.5, 0.5, 1.0, {0.1, 1.0, 1.0}, 0.0), Error);
    EXPECT_NO_THROW(order_dependence_A(1.0, 0.5, 1.0, {0.0, 1.0, 1.0}, 0.5));
}

TEST(OrderDependenceBound, ZeroLipschitzEqualsA) {
    const ProblemSpec p(builtin_kernel("linear", 0.0, 1.0), FractionalOrder(0.5, 0.5), 1.0,
                        RhsSpec::power_source(1.0, 1.0));
    const OrderPerturbation pert{0.1, 1.0, 2.0};
    const MeshPtr m = unit_mesh("linear", 64, 2.0);
    const auto bound = order_dependence_bound(p, pert, m);
    const double mu = bound.weight_exponent();
    EXPECT_NEAR(mu, 1.0 - (0.75 + 0.1 * (0.5 - 1.0)), 1e-15);
    for (std::size_t j = 1; j < m->size(); ++j) {
        EXPECT_NEAR(bound[j], order_dependence_A(p, pert, m->t(j)) * std::pow(m->w(j), mu), 1e-13);
    }
}

TEST(DataDependenceBound, ClosedForm) {
    const ProblemSpec p(builtin_kernel("linear", 0.0, 1.0), FractionalOrder(0.6, 0.5), 1.0, RhsSpec::linear_in_u(2.0));
    const double w = 0.49;
    const double g = p.order().gamma();
    const double weighted = 0.1 * mittag_leffler(0.6, g, 2.0 * std::pow(w, 0.6));
    EXPECT_NEAR(data_dependence_bound_weighted(p, {0.1}, w), weighted, 1e-14);
    EXPECT_NEAR(data_dependence_bound(p, {-0.1}, w), weighted * std::pow(w, g - 1.0), 1e-13);
}

TEST(VerifyDependence, DataModeIsTightForLinearCaputo) {
    const ProblemSpec p(builtin_kernel("linear", 0.0, 1.0), FractionalOrder(0.5, 1.0), 1.0, RhsSpec::linear_in_u(0.5));
    const DependenceReport rep = verify_dependence(p, DataPerturbation{0.01}, SolveConfig{});
    EXPECT_EQ(rep.mode, DependenceMode::Data);
    EXPECT_EQ(rep.weight, 0.0);
    for (std::size_t j = 1; j < rep.margin.size(); ++j) {
        EXPECT_GE(rep.margin[j], -5e-4);
        EXPECT_LE(std::abs(rep.margin[j]), 1e-3);
    }
    EXPECT_FALSE(rep.bound_not_tight);
    ASSERT_NE(rep.base, nullptr);
    ASSERT_NE(rep.perturbed, nullptr);
}

TEST(VerifyDependence, ZeroPerturbationGivesZeroDiff) {
    const CatalogEntry e = builtin_catalog().front();
    const DependenceReport rep = verify_dependence(e.problem, DataPerturbation{0.0}, e.config);
    EXPECT_LE(rep.max_diff, 2e-10);
    EXPECT_GE(rep.min_margin, 0.0);
}

TEST(VerifyDependence, BoundHoldsOnCatalog) {
    for (const CatalogEntry& e : builtin_catalog()) {
        for (double delta : {0.01, 0.1}) {
            const DependenceReport rep = verify_dependence(e.problem, DataPerturbation{delta}, e.config);
            EXPECT_GE(rep.min_margin, -5e-4) << e.name << " delta=" << delta;
        }
    }
}

TEST(VerifyDependence, OrderModeHolds) {
    const CatalogEntry e = builtin_catalog().front();
    const DependenceReport rep = verify_dependence(e.problem, OrderPerturbation{0.1, 1.0, 0.0}, e.config);
    EXPECT_EQ(rep.mode, DependenceMode::Order);
    EXPECT_NEAR(rep.weight, 1.0 - (2.0 / 3.0 + 0.1 * (1.0 / 3.0 - 1.0)), 1e-12);
    EXPECT_GE(rep.min_margin, -5e-4);
    EXPECT_GT(rep.max_diff, 0.0);
}

TEST(Catalog, Contents) {
    const auto cat = builtin_catalog();
    ASSERT_EQ(cat.size(), 5u);
    EXPECT_EQ(cat[0].name, "example5");
    EXPECT_EQ(cat[0].problem.kernel().label(), "sqrt_shift");
    EXPECT_DOUBLE_EQ(cat[0].problem.lipschitz_M(), 0.1);
    EXPECT_DOUBLE_EQ(cat[0].problem.lipschitz_Mstar(), 0.1);
    EXPECT_EQ(cat[1].name, "linear");
    for (const auto& e : cat) EXPECT_NO_THROW(e.config.validate());
}
