#include "nlpot/closedform.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace nlpot {

HarmonicPolynomial HarmonicPolynomial::one() {
    return {0, [](const Point&) { return 1.0; }, "1"};
}

HarmonicPolynomial HarmonicPolynomial::coordinate(int i) {
    if (i < 0 || i > 2) throw std::domain_error("coordinate index out of range");
    return {1, [i](const Point& x) { return x[i]; }, "x" + std::to_string(i)};
}

HarmonicPolynomial HarmonicPolynomial::traceless_quadratic(int i, int j) {
    if (i == j || i < 0 || j < 0 || i > 2 || j > 2)
        throw std::domain_error("traceless quadratic needs distinct indices");
    return {2, [i, j](const Point& x) { return x[i] * x[j]; },
            "x" + std::to_string(i) + "x" + std::to_string(j)};
}

double phi_kappa(const HarmonicPolynomial& P, double kappa, const Point& x) {
    if (!(kappa > 0.0)) throw std::domain_error("phi_kappa: kappa must be positive");
    const double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    return P.eval(x) * std::pow(1.0 + r2, -kappa);
}

bool phi_kappa_in_L2(const HarmonicPolynomial& P, double kappa, int d) {
    return kappa >= 0.25 * (d + 2 * P.l);
}

double V_kappa_alpha(const HarmonicPolynomial& P, double kappa, double alpha,
                     int d, const Point& x, const Precision& prec) {
    if (!(kappa > P.l)) throw std::domain_error("V_kappa_alpha: need kappa > l");
    if (!(alpha > 0.0 && alpha < 2.0)) throw std::domain_error("alpha out of (0,2)");
    const double delta = d + 2.0 * P.l;
    const double r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
    const double pref = -std::pow(2.0, alpha) * rgamma(kappa) *
                        gamma_fn(0.5 * (delta + alpha)) * gamma_fn(0.5 * alpha + kappa);
    const double F = gauss_2f1_regularized(0.5 * (delta + alpha), 0.5 * alpha + kappa,
                                           0.5 * delta, -r2, prec);
    return pref * std::pow(1.0 + r2, kappa) * F;
}

ScalarField phi_kappa_field(const HarmonicPolynomial& P, double kappa, int d) {
    if (P.l == 0) {
        ScalarField f = ScalarField::poly_decay(kappa, d);
        std::ostringstream os;
        os << "motiv:" << kappa << ",0";
        f.id = os.str();
        return f;
    }
    if (P.l == 1 && d == 1) {
        std::ostringstream os;
        os << "motiv:" << kappa << ",1";
        return ScalarField::line(
            [kappa](double x) { return x * std::pow(1.0 + x * x, -kappa); }, 1.0,
            os.str());
    }
    throw std::invalid_argument("phi_kappa_field: only l = 0, or l = 1 with d = 1");
}

double verify_eigen_identity(const HarmonicPolynomial& P, double kappa,
                             double alpha, int d,
                             const std::vector<Point>& sample_xs,
                             const QuadratureConfig& cfg) {
    const ScalarField phi = phi_kappa_field(P, kappa, d);
    const BernsteinSpec spec = BernsteinSpec::fractional(alpha);
    const JumpKernel kernel(spec, d);
    // V can cross zero inside the sample set; a hard floor keeps the relative
    // residual meaningful there instead of dividing rounding noise by itself
    const double eps_floor = 1e-6;
    double worst = 0.0;
    for (const Point& x : sample_xs) {
        const double lhs = apply_with_kernel(kernel, phi, x, cfg).value;
        const double rhs = V_kappa_alpha(P, kappa, alpha, d, x) * phi_kappa(P, kappa, x);
        const double res = std::abs(lhs + rhs) / (std::abs(rhs) + eps_floor);
        worst = std::max(worst, res);
    }
    return worst;
}

}  // namespace nlpot
