#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hilfer/error.hpp"
#include "hilfer/special_functions.hpp"

using namespace hilfer;

// Reference values computed with mpmath at 40 digits.

TEST(Gamma, ReferenceValues) {
    EXPECT_NEAR(gamma_fn(0.5), std::sqrt(std::numbers::pi), 1e-15);
    EXPECT_NEAR(gamma_fn(0.3) / 2.9915689876875906283, 1.0, 1e-14);
    EXPECT_NEAR(gamma_fn(2.0 / 3.0) / 1.3541179394264004169, 1.0, 1e-14);
    EXPECT_NEAR(gamma_fn(7.0 / 6.0) / 0.92771933363003920071, 1.0, 1e-14);
    EXPECT_NEAR(gamma_fn(1.7) / 0.90863873285329044998, 1.0, 1e-14);
    EXPECT_NEAR(gamma_fn(0.05) / 19.470085311255512864, 1.0, 1e-14);
    EXPECT_NEAR(gamma_fn(10.5) / 1133278.3889487855673, 1.0, 1e-14);
    EXPECT_NEAR(gamma_fn(25.0) / 6.2044840173323943936e+23, 1.0, 1e-14);
}

TEST(Gamma, IntegersAreFactorials) {
    double f = 1.0;
    for (int n = 1; n <= 20; ++n) {
        EXPECT_EQ(gamma_fn(n), f);
        f *= n;
    }
}

TEST(Gamma, Recurrence) {
    for (double z = 0.05; z < 30.0; z += 0.37) EXPECT_NEAR(gamma_fn(z + 1.0) / (z * gamma_fn(z)), 1.0, 5e-14);
}

TEST(Gamma, AgreesWithStdTgamma) {
    for (double z = 0.01; z < 150.0; z *= 1.3) EXPECT_NEAR(gamma_fn(z) / std::tgamma(z), 1.0, 1e-13) << z;
}

TEST(LogGamma, ReferenceValues) {
    EXPECT_NEAR(log_gamma(200.0), 857.93366982585743682, 1e-12);
    EXPECT_NEAR(log_gamma(55.5), 166.32150615984036914, 1e-12);
    EXPECT_NEAR(log_gamma(1.0), 0.0, 1e-15);
    for (double z = 0.01; z < 500.0; z *= 1.7) EXPECT_NEAR(log_gamma(z), std::lgamma(z), 1e-12 * (1.0 + std::abs(std::lgamma(z))));
}

TEST(Beta, ReferenceAndSymmetry) {
    EXPECT_NEAR(beta_fn(1.3, 2.5), 0.25415419017646049454, 1e-15);
    EXPECT_DOUBLE_EQ(beta_fn(2.5, 1.3), beta_fn(1.3, 2.5));
    EXPECT_NEAR(beta_fn(1.0, 4.0), 0.25, 1e-16);
    EXPECT_NEAR(beta_fn(100.0, 100.0), std::exp(2 * std::lgamma(100.0) - std::lgamma(200.0)), 1e-70);
}

TEST(SpecialFunctions, DomainErrors) {
    EXPECT_THROW(gamma_fn(0.0), Error);
    EXPECT_THROW(gamma_fn(-1.5), Error);
    EXPECT_THROW(log_gamma(0.0), Error);
    EXPECT_THROW(beta_fn(1.0, -1.0), Error);
}

TEST(MittagLeffler, ClassicalCases) {
    EXPECT_NEAR(mittag_leffler(1.0, 1.0, 1.0), std::numbers::e, 1e-14);
    for (double z : {-2.0, -0.5, 0.3, 3.0}) EXPECT_NEAR(mittag_leffler(1.0, z) / std::exp(z), 1.0, 1e-13);
    for (double z : {0.25, 1.0, 4.0}) EXPECT_NEAR(mittag_leffler(2.0, 1.0, z), std::cosh(std::sqrt(z)), 1e-14);
    EXPECT_NEAR(mittag_leffler(2.0, 1.0, -4.0), std::cos(2.0), 1e-14);
    EXPECT_NEAR(mittag_leffler(1.0, 2.0, 2.0), std::expm1(2.0) / 2.0, 1e-14);
}

TEST(MittagLeffler, ErfcOracle) {
    // E_{1/2,1}(z) = exp(z^2) erfc(-z)
    for (double z : {-1.0, -0.2, 0.5, 1.5}) {
        EXPECT_NEAR(mittag_leffler(0.5, 1.0, z), std::exp(z * z) * std::erfc(-z), 1e-13 * std::exp(z * z));
    }
    EXPECT_NEAR(mittag_leffler(0.5, 1.0, 0.5), 1.9523604891825570933, 1e-14);
}

TEST(MittagLeffler, ReferenceValues) {
    EXPECT_NEAR(mittag_leffler(0.7, 0.9, 2.0) / 23.216030433716748602, 1.0, 1e-13);
    EXPECT_NEAR(mittag_leffler(0.3, 1.0, 1.0) / 8.0406755969670580104, 1.0, 1e-13);
    EXPECT_NEAR(mittag_leffler(0.5, 2.0 / 3.0, -1.0), 0.24297845028520945364, 1e-13);
    EXPECT_NEAR(mittag_leffler(1.5, 1.0, -3.0), -0.17556537379997824292, 1e-13);
    EXPECT_NEAR(mittag_leffler(0.6, 0.8, 2.0) / 50.178709760039850397, 1.0, 1e-13);
    EXPECT_NEAR(mittag_leffler(0.9, 1.0, 10.0) / 451737.77456773778129, 1.0, 1e-12);
}

TEST(MittagLeffler, ZeroArgument) {
    EXPECT_DOUBLE_EQ(mittag_leffler(0.4, 1.0, 0.0), 1.0);
    EXPECT_NEAR(mittag_leffler(0.4, 0.5, 0.0), 1.0 / std::sqrt(std::numbers::pi), 1e-15);
}

TEST(MittagLeffler, IncreasingInPositiveArgument) {
    for (double nu : {0.3, 0.5, 0.9}) {
        double prev = mittag_leffler(nu, 1.0, 0.0);
        for (double z = 0.25; z <= 5.0; z += 0.25) {
            const double v = mittag_leffler(nu, 1.0, z);
            EXPECT_GT(v, prev);
            prev = v;
        }
    }
}

TEST(MittagLeffler, Errors) {
    EXPECT_THROW(mittag_leffler(0.0, 1.0, 1.0), Error);
    EXPECT_THROW(mittag_leffler(0.5, -1.0, 1.0), Error);
    EXPECT_THROW(mittag_leffler(0.5, 1.0, 60.0), Error);
    MlSeriesPolicy tight;
    tight.max_terms = 100;
    try {
        mittag_leffler(0.1, 1.0, 20.0, tight);
        FAIL() << "expected a convergence error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ConvergenceError);
    }
    // Alternating series for large negative argument loses all digits.
    EXPECT_THROW(mittag_leffler(0.5, 1.0, -40.0), Error);
}
