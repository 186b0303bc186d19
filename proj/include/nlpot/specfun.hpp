#pragma once

#include <cstddef>

namespace nlpot {

struct Precision {
    double rel_tol = 1e-12;
    std::size_t max_terms = 10000;
};

// ln Gamma(x), x > 0.
double log_gamma(double x);

// Gamma(x) for real x (poles at nonpositive integers throw).
double gamma_fn(double x);

// 1/Gamma(x) for any real x; zero at nonpositive integers.
double rgamma(double x);

// Gamma(s, x) = int_x^inf t^{s-1} e^{-t} dt.  Supports s < 0 when x > 0.
double upper_incomplete_gamma(double s, double x, const Precision& prec = {});

// gamma(s, x) = int_0^x t^{s-1} e^{-t} dt, s > 0.
double lower_incomplete_gamma(double s, double x, const Precision& prec = {});

// Modified Bessel function of the third kind K_rho(z), rho >= -1/2, z > 0.
double bessel_k(double rho, double z, const Precision& prec = {});

// 2F1(a, b; c; z) / Gamma(c) for z <= 0, c > 0.
double gauss_2f1_regularized(double a, double b, double c, double z,
                             const Precision& prec = {});

// Lerch transcendent sum_{n>=0} z^n / (n + zeta)^s, |z| < 1, zeta > 0.
double lerch_phi(double z, double s, double zeta, const Precision& prec = {});

namespace detail {
// Individual 2F1 evaluation routes, exposed for overlap cross-checks.
double hyp2f1_reg_series(double a, double b, double c, double z, const Precision& prec);
double hyp2f1_reg_pfaff(double a, double b, double c, double z, const Precision& prec);
double hyp2f1_reg_inv_z(double a, double b, double c, double z, const Precision& prec);
}

}  // namespace nlpot
