#pragma once

namespace hilfer {

/// Gamma(zeta) for zeta > 0 (Lanczos approximation, relative error ~1e-15).
/// Throws DomainError for zeta <= 0.
double gamma_fn(double zeta);

/// log Gamma(zeta) for zeta > 0.
double log_gamma(double zeta);

/// Beta(p, q) = Gamma(p) Gamma(q) / Gamma(p + q) for p, q > 0.
double beta_fn(double p, double q);

/// Truncation policy for the Mittag-Leffler series.
struct MlSeriesPolicy {
    double term_tol = 1e-14;  ///< relative size of a negligible term
    int max_terms = 2000;
    double arg_cap = 50.0;  ///< largest accepted |z|
};

/// Two-parameter Mittag-Leffler function E_{nu,mu}(z) = sum_k z^k / Gamma(nu k + mu),
/// by direct summation. The series stops once three consecutive terms fall
/// below term_tol times the partial sum.
///
/// Throws DomainError for nu <= 0, mu <= 0 or |z| > arg_cap; ConvergenceError
/// when max_terms is reached, the sum overflows, or cancellation among
/// alternating terms would destroy more than half of the significant digits.
double mittag_leffler(double nu, double mu, double z, const MlSeriesPolicy& policy = {});

/// One-parameter form E_nu(z) = E_{nu,1}(z).
inline double mittag_leffler(double nu, double z) { return mittag_leffler(nu, 1.0, z); }

}  // namespace hilfer
