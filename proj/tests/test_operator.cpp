#include "doctest.h"

#include <cmath>

#include "nlpot/closedform.hpp"
#include "nlpot/nonlocal.hpp"
#include "nlpot/quadrature.hpp"

using namespace nlpot;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Fourier-side reference for Phi(-Delta) applied to the unit Gaussian on the
// line: sqrt(2/pi) int_0^inf Phi(xi^2) e^{-xi^2/2} cos(x xi) dxi
double oracle_line(const BernsteinSpec& spec, double x) {
    const auto f = [&](double xi) {
        return phi_eval(spec, xi * xi) * std::exp(-0.5 * xi * xi) * std::cos(x * xi);
    };
    return std::sqrt(2.0 / kPi) * integrate(f, 0.0, 40.0, 1e-12).value;
}

// same for the unit Gaussian in R^3, evaluated at radius r > 0
double oracle_r3(const BernsteinSpec& spec, double r) {
    const auto f = [&](double xi) {
        return xi * std::sin(xi * r) * phi_eval(spec, xi * xi) * std::exp(-0.5 * xi * xi);
    };
    return std::pow(2.0 * kPi, -1.5) * (4.0 * kPi / r) *
           integrate(f, 0.0, 40.0, 1e-12).value;
}

}  // namespace

TEST_CASE("second difference of a quadratic is exactly 2 h^2") {
    const ScalarField f = ScalarField::line([](double x) { return x * x; }, 100.0);
    for (double h : {0.01, 0.3, 2.0}) {
        CHECK(second_difference(f, {1.0, 0, 0}, {h, 0, 0}) ==
              doctest::Approx(2.0 * h * h).epsilon(1e-10));
    }
}

TEST_CASE("constants are annihilated") {
    const ScalarField one = ScalarField::radial_profile([](double) { return 1.0; }, 1, 1.0);
    const auto r = apply_nonlocal_full(BernsteinSpec::fractional(1.0), one, {0.5, 0, 0});
    CHECK(std::abs(r.value) < 1e-10);
}

TEST_CASE("linearity") {
    const auto spec = BernsteinSpec::fractional(0.8);
    const ScalarField f = ScalarField::gaussian(1.0, 1);
    const ScalarField g = ScalarField::poly_decay(1.0, 1);
    const ScalarField fg = ScalarField::radial_profile(
        [](double r) { return std::exp(-0.5 * r * r) + std::pow(1.0 + r * r, -1.0); }, 1,
        2.0);
    const Point x = {1.5, 0, 0};
    const double lhs = apply_nonlocal(spec, fg, x);
    const double rhs = apply_nonlocal(spec, f, x) + apply_nonlocal(spec, g, x);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
}

TEST_CASE("translation covariance on the line") {
    const auto spec = BernsteinSpec::fractional(1.2);
    const double c = 2.0;
    const ScalarField shifted = ScalarField::line(
        [c](double x) { return std::exp(-0.5 * (x - c) * (x - c)); }, 1.0);
    const ScalarField centered = ScalarField::gaussian(1.0, 1);
    for (double t : {0.0, 0.7, 2.5}) {
        CHECK(apply_nonlocal(spec, shifted, {c + t, 0, 0}) ==
              doctest::Approx(apply_nonlocal(spec, centered, {t, 0, 0})).epsilon(1e-8));
    }
}

TEST_CASE("split radius does not change the value") {
    const ScalarField f = ScalarField::gaussian(1.0, 1);
    const auto spec = BernsteinSpec::fractional(1.0);
    double ref = 0.0;
    bool first = true;
    for (double R : {0.5, 1.0, 2.0}) {
        QuadratureConfig cfg;
        cfg.split_radius_R = R;
        const double v = apply_nonlocal(spec, f, {1.0, 0, 0}, cfg);
        if (first) { ref = v; first = false; }
        else CHECK(v == doctest::Approx(ref).epsilon(1e-7));
    }
}

TEST_CASE("spectral reference on the line") {
    const ScalarField f = ScalarField::gaussian(1.0, 1);
    for (const auto& spec :
         {BernsteinSpec::fractional(1.0), BernsteinSpec::relativistic(1.0, 1.0),
          BernsteinSpec::fractional(0.6)}) {
        for (double x : {0.0, 1.0, 3.0, 5.0}) {
            const double v = apply_nonlocal(spec, f, {x, 0, 0});
            CHECK(v == doctest::Approx(oracle_line(spec, x)).epsilon(1e-3));
        }
    }
}

TEST_CASE("spectral reference in three dimensions") {
    const ScalarField f = ScalarField::gaussian(1.0, 3);
    const auto spec = BernsteinSpec::fractional(1.0);
    for (double r : {0.5, 1.0, 2.5}) {
        const double v = apply_nonlocal(spec, f, {r, 0, 0});
        CHECK(v == doctest::Approx(oracle_r3(spec, r)).epsilon(1e-3));
    }
}

TEST_CASE("two-dimensional angular reduction via the eigen identity") {
    const auto P = HarmonicPolynomial::one();
    const std::vector<Point> xs = {{0, 0, 0}, {1, 0, 0}, {3, 0, 0}};
    CHECK(verify_eigen_identity(P, 1.0, 1.0, 2, xs) < 1e-2);
}

TEST_CASE("decomposition through the sigma operator") {
    const ScalarField f = ScalarField::gaussian(1.0, 1);
    const Point x = {1.0, 0, 0};
    const double lm = apply_nonlocal(BernsteinSpec::relativistic(1.0, 1.0), f, x);
    const double l0 = apply_nonlocal(BernsteinSpec::fractional(1.0), f, x);
    const double g = apply_g_operator(1.0, 1.0, f, x);
    CHECK(std::abs(lm - (l0 - g)) < 1e-6);
    // mass bound |G f| <= 2 m sup |f|
    CHECK(std::abs(g) <= 2.0);
}

TEST_CASE("zygmund estimator") {
    // smooth quadratic: the ratio is exactly 2 at every h
    const ScalarField q = ScalarField::line([](double x) { return x * x; }, 100.0);
    CHECK(estimate_zygmund_L(q, {0, 0, 0}, 1.0, 24) == doctest::Approx(2.0).epsilon(1e-9));

    // polynomially decaying profile at |x| = 50: second-derivative scale
    // below, eigen-shape envelope above
    const ScalarField p = ScalarField::poly_decay(0.75, 1);
    const double L = estimate_zygmund_L(p, {50.0, 0, 0}, 25.0, 40);
    const double curvature = 3.75 * std::pow(50.0, -3.5);  // phi'' for r^{-1.5}
    const double envelope = 4.0 * 0.75 * 2.5 / std::pow(0.5, 3.5) * std::pow(50.0, -3.5);
    CHECK(L >= 0.5 * curvature);
    CHECK(L <= envelope);

    // jump discontinuity: the ratio blows up as h shrinks
    const ScalarField step =
        ScalarField::line([](double x) { return x < 0.0 ? 0.0 : 1.0; }, 1.0);
    CHECK(estimate_zygmund_L(step, {0.0005, 0, 0}, 1.0, 40) > 1e4);
}

TEST_CASE("operator bound from the kernel moments") {
    // |Phi(-Delta) f(x)| <= L_f(x)/2 J^(2)(R) + 2 sup|f| nu(B_R^c)
    const ScalarField f = ScalarField::gaussian(1.0, 1);
    const auto spec = BernsteinSpec::fractional(1.0);
    const JumpKernel k(spec, 1);
    const Point x = {1.0, 0, 0};
    const double v = std::abs(apply_nonlocal(spec, f, x));
    const double L = estimate_zygmund_L(f, x, 1.0, 32);
    const double bound = 0.5 * L * second_moment_J(k, 1.0) + 2.0 * nu_tail(k, 1.0);
    CHECK(v <= bound);
}

TEST_CASE("error estimates are honest for the spectral cases") {
    const ScalarField f = ScalarField::gaussian(1.0, 1);
    const auto spec = BernsteinSpec::fractional(1.0);
    for (double x : {0.0, 2.0}) {
        const auto r = apply_nonlocal_full(spec, f, {x, 0, 0});
        CHECK(r.est_error >= 0.0);
        CHECK(std::abs(r.value - oracle_line(spec, x)) <=
              std::max(1e3 * r.est_error, 1e-3 * std::abs(r.value)));
    }
}
