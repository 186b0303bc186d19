#pragma once

#include <functional>
#include <vector>

namespace nlpot {

struct QuadResult {
    double value = 0.0;
    double abs_err = 0.0;
};

using Integrand = std::function<double(double)>;

// Single G7-K15 panel on [a, b].
QuadResult gk15(const Integrand& f, double a, double b);

// Adaptive Gauss-Kronrod on a finite interval.
QuadResult integrate(const Integrand& f, double a, double b,
                     double rel_tol = 1e-10, double abs_tol = 0.0,
                     int max_intervals = 4000);

// int_a^b with the lower endpoint resolved on log-spaced panels down to
// a * shrink (integrable singularities at a = 0 are handled by panels
// [b*10^-k-1, b*10^-k] when a == 0).
QuadResult integrate_log_singular(const Integrand& f, double a, double b,
                                  double rel_tol = 1e-10, int decades = 16);

// int_a^inf by interval doubling: stop when three successive doublings
// change the accumulated value by less than rel_tol.
QuadResult integrate_to_infinity(const Integrand& f, double a,
                                 double rel_tol = 1e-10, double first_len = 0.0);

// Gauss-Legendre nodes/weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace nlpot
