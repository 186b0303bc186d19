#pragma once

#include <string>
#include <vector>

#include "nlpot/fields.hpp"
#include "nlpot/nonlocal.hpp"

namespace nlpot {

struct HarmonicPolynomial {
    int l = 0;
    std::function<double(const Point&)> eval;
    std::string name;

    static HarmonicPolynomial one();                       // P = 1
    static HarmonicPolynomial coordinate(int i);           // P = x_i
    static HarmonicPolynomial traceless_quadratic(int i, int j);  // P = x_i x_j, i != j
};

// phi_kappa = P(x) / (1 + |x|^2)^kappa
double phi_kappa(const HarmonicPolynomial& P, double kappa, const Point& x);

// true iff phi_kappa is square integrable: kappa >= delta/4, delta = d + 2l
bool phi_kappa_in_L2(const HarmonicPolynomial& P, double kappa, int d);

double V_kappa_alpha(const HarmonicPolynomial& P, double kappa, double alpha,
                     int d, const Point& x, const Precision& prec = {});

// eigenfunction as a ScalarField (l = 0 any d, l = 1 only d = 1)
ScalarField phi_kappa_field(const HarmonicPolynomial& P, double kappa, int d);

// max over samples of |Phi(-Delta) phi + V phi| / (|V phi| + eps_floor)
double verify_eigen_identity(const HarmonicPolynomial& P, double kappa,
                             double alpha, int d,
                             const std::vector<Point>& sample_xs,
                             const QuadratureConfig& cfg = {});

}  // namespace nlpot
