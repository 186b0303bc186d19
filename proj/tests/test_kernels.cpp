#include "doctest.h"

#include <cmath>

#include "nlpot/kernels.hpp"

using namespace nlpot;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("unit-ball volumes") {
    CHECK(omega_d(1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(omega_d(2) == doctest::Approx(kPi).epsilon(1e-14));
    CHECK(omega_d(3) == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-14));
}

TEST_CASE("fractional kernel constant") {
    // d = 1, alpha = 1 -> j(r) = 1/(pi r^2)
    CHECK(fractional_kernel_constant(1, 1.0) == doctest::Approx(1.0 / kPi).epsilon(1e-13));
    // generic formula check
    const double c = fractional_kernel_constant(2, 0.5);
    const double ref = 0.5 * std::pow(2.0, -0.5) * gamma_fn(1.25) /
                       (kPi * gamma_fn(0.75));
    CHECK(c == doctest::Approx(ref).epsilon(1e-13));
}

TEST_CASE("fractional kernel: quadrature matches the exact power law") {
    const JumpKernel k(BernsteinSpec::fractional(1.0), 1);
    for (double r : {0.5, 1.0, 5.0, 20.0}) {
        const double exact = 1.0 / (kPi * r * r);
        CHECK(k.quadrature_eval(r) == doctest::Approx(exact).epsilon(1e-6));
        CHECK(k.eval(r) == doctest::Approx(exact).epsilon(1e-12));
    }
    // another (d, alpha)
    const JumpKernel k2(BernsteinSpec::fractional(1.4), 3);
    const double c2 = fractional_kernel_constant(3, 1.4);
    for (double r : {0.5, 3.0}) {
        CHECK(k2.quadrature_eval(r) ==
              doctest::Approx(c2 * std::pow(r, -4.4)).epsilon(1e-6));
    }
}

TEST_CASE("relativistic kernel dual route and Bessel form") {
    const JumpKernel k(BernsteinSpec::relativistic(1.0, 1.0), 1);
    for (double r : {0.5, 2.0, 10.0}) {
        CHECK(k.quadrature_eval(r) == doctest::Approx(k.eval(r)).epsilon(1e-8));
        // d = 1, alpha = 1, m = 1: j(r) = K_1(r) / (pi r)
        CHECK(k.eval(r) == doctest::Approx(bessel_k(1.0, r) / (kPi * r)).epsilon(1e-10));
    }
}

TEST_CASE("sum kernel adds the stable kernels") {
    const JumpKernel k(BernsteinSpec::sum(1.0, 0.5), 1);
    const JumpKernel ka(BernsteinSpec::fractional(1.0), 1);
    const JumpKernel kb(BernsteinSpec::fractional(0.5), 1);
    for (double r : {0.3, 2.0, 15.0}) {
        CHECK(k.eval(r) == doctest::Approx(ka.eval(r) + kb.eval(r)).epsilon(1e-10));
        CHECK(k.quadrature_eval(r) == doctest::Approx(k.eval(r)).epsilon(1e-6));
    }
}

TEST_CASE("kernel moments with exact references") {
    const JumpKernel k(BernsteinSpec::fractional(1.0), 1);
    // nu(B_R^c) = 2 int_R^inf dr/(pi r^2) = 2/(pi R)
    CHECK(nu_tail(k, 2.0) == doctest::Approx(1.0 / kPi).epsilon(1e-8));
    // J^(2)(R) = 2 int_0^R r^2 j = 2R/pi
    CHECK(second_moment_J(k, 3.0) == doctest::Approx(6.0 / kPi).epsilon(1e-8));
    // beta(r) = r^{3/2}: 2/pi int_0^1 r^{-1/2} dr = 4/pi
    CHECK(moment_J_beta(k, 1.5, 1.0) == doctest::Approx(4.0 / kPi).epsilon(1e-8));
    CHECK_THROWS(moment_J_beta(k, 0.5, 1.0));
    // (2 int_1^inf (pi r^2)^{-2})^{1/2} = sqrt(2/(3 pi^2))
    CHECK(lp_tail_norm(k, 2.0, 1.0) ==
          doctest::Approx(std::sqrt(2.0 / (3.0 * kPi * kPi))).epsilon(1e-8));
}

TEST_CASE("asymptote report: regularly varying") {
    const auto rep = asymptote_validate(JumpKernel(BernsteinSpec::fractional(1.0), 1));
    CHECK(rep.tail == TailClass::RegularlyVarying);
    CHECK(rep.exact_constant == doctest::Approx(2.0 * rep.printed_constant).epsilon(1e-13));
    for (const auto& p : rep.probes) {
        CHECK(p.ratio_exact == doctest::Approx(1.0).epsilon(0.02));
        CHECK(p.ratio_printed == doctest::Approx(2.0).epsilon(0.02));
    }
}

TEST_CASE("asymptote report: exponentially light") {
    const auto rep =
        asymptote_validate(JumpKernel(BernsteinSpec::relativistic(1.0, 1.0), 1));
    CHECK(rep.tail == TailClass::ExponentiallyLight);
    for (const auto& p : rep.probes) {
        CHECK(p.ratio_exact == doctest::Approx(1.0).epsilon(0.03));
        CHECK(p.ratio_printed == doctest::Approx(2.0).epsilon(0.06));
    }
}

TEST_CASE("exponentially light tail mass via the incomplete gamma bracket") {
    // nu(B_M^c) for rel d=1 a=1 m=1: kernel ~ C r^{-3/2} e^{-r} with
    // C = 1/sqrt(2 pi); radial tail integral is C Gamma(-1/2, M)
    const JumpKernel k(BernsteinSpec::relativistic(1.0, 1.0), 1);
    const double M = 12.0;
    const double exact_c = 1.0 / std::sqrt(2.0 * kPi);
    const double bracket = 2.0 * exact_c * upper_incomplete_gamma(-0.5, M);
    CHECK(nu_tail(k, M) == doctest::Approx(bracket).epsilon(0.02));
    // printed constant is half the true one
    CHECK(nu_tail(k, M) / (0.5 * bracket) == doctest::Approx(2.0).epsilon(0.04));
}

TEST_CASE("sigma kernel representations agree") {
    const SigmaKernel s(1.0, 1.0, 1);
    for (double r : {0.3, 1.0, 3.0, 20.0}) {
        CHECK(s.eval_w_integral(r) == doctest::Approx(s.eval_bessel_diff(r)).epsilon(1e-8));
    }
}

TEST_CASE("sigma = j_0 - j_m pointwise") {
    const SigmaKernel s(1.0, 1.0, 1);
    const JumpKernel j0(BernsteinSpec::fractional(1.0), 1);
    const JumpKernel jm(BernsteinSpec::relativistic(1.0, 1.0), 1);
    for (double r = 0.1; r <= 20.0; r *= 2.0) {
        CHECK(s.eval(r) == doctest::Approx(j0.eval(r) - jm.eval(r)).epsilon(1e-8));
    }
}

TEST_CASE("sigma asymptote and mass") {
    const SigmaKernel s(1.0, 1.0, 1);
    // sigma(r) ~ j_0(r) = 1/(pi r^2) at infinity
    CHECK(s.eval(50.0) * kPi * 2500.0 == doctest::Approx(1.0).epsilon(0.02));
    CHECK(s.asymptote_constant() == doctest::Approx(1.0 / kPi).epsilon(1e-12));
    CHECK(sigma_total_mass(s) == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(sigma_total_mass(SigmaKernel(2.0, 0.5, 3)) == doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("sigma report: ratios and decreasing window") {
    const SigmaKernel s(1.0, 1.0, 1);
    const auto rep = sigma_report(s, 30.0);
    CHECK(rep.mass == doctest::Approx(1.0).epsilon(1e-3));
    // printed tail constant is 2x the exact one, so measured/printed -> 0.5
    CHECK(rep.tail_ratio_printed == doctest::Approx(0.5).epsilon(0.05));
    CHECK(rep.tail_ratio_exact == doctest::Approx(1.0).epsilon(0.05));
    CHECK(rep.decreasing_on_window);
    CHECK(rep.decreasing_window_R > 0.0);
}

TEST_CASE("sigma positivity and monotone tail") {
    const SigmaKernel s(1.0, 1.0, 1);
    double prev = s.eval(1.0);
    CHECK(prev > 0.0);
    for (double r = 2.0; r <= 64.0; r *= 2.0) {
        const double cur = s.eval(r);
        CHECK(cur > 0.0);
        CHECK(cur < prev);
        prev = cur;
    }
}
