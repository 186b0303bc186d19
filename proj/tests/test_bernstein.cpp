#include "doctest.h"

#include <cmath>

#include "nlpot/bernstein.hpp"

using namespace nlpot;

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;

LevyDensity exponential_density() {
    LevyDensity l;
    l.density = [](double t) { return std::exp(-t); };
    l.tail = TailClass::ExponentiallyLight;
    l.alpha = 0.0;
    l.eta = 1.0;
    l.theta = 1.0;
    return l;
}

LevyDensity frac_like_density(double alpha) {
    const double theta = 0.5 * alpha / gamma_fn(1.0 - 0.5 * alpha);
    LevyDensity l;
    l.density = [theta, alpha](double t) { return theta * std::pow(t, -1.0 - 0.5 * alpha); };
    l.tail = TailClass::RegularlyVarying;
    l.alpha = alpha;
    l.theta = theta;
    return l;
}
}  // namespace

TEST_CASE("phi closed forms") {
    CHECK(phi_eval(BernsteinSpec::fractional(1.0), 4.0) ==
          doctest::Approx(2.0).epsilon(1e-14));
    CHECK(phi_eval(BernsteinSpec::fractional(0.6), 9.0) ==
          doctest::Approx(std::pow(9.0, 0.3)).epsilon(1e-14));
    // rel: (u + m^{2/a})^{a/2} - m
    CHECK(phi_eval(BernsteinSpec::relativistic(1.0, 1.0), 3.0) ==
          doctest::Approx(2.0 - 1.0).epsilon(1e-14));
    CHECK(phi_eval(BernsteinSpec::sum(1.0, 0.5), 16.0) ==
          doctest::Approx(4.0 + 2.0).epsilon(1e-14));
    // logt: u^{a/2} (log(1+u))^{+-b/2}
    const double u = 5.0;
    CHECK(phi_eval(BernsteinSpec::log_tempered(1.0, 0.5, -1), u) ==
          doctest::Approx(std::sqrt(u) / std::pow(std::log1p(u), 0.25)).epsilon(1e-14));
    CHECK(phi_eval(BernsteinSpec::log_tempered(0.8, 0.6, +1), u) ==
          doctest::Approx(std::pow(u, 0.4) * std::pow(std::log1p(u), 0.3)).epsilon(1e-14));
}

TEST_CASE("custom density: exponential gives u/(1+u)") {
    const auto spec = BernsteinSpec::custom_density(exponential_density());
    for (double u : {0.1, 1.0, 10.0, 100.0}) {
        CHECK(phi_eval(spec, u) == doctest::Approx(u / (1.0 + u)).epsilon(1e-6));
    }
}

TEST_CASE("custom density recovers the fractional symbol") {
    const auto spec = BernsteinSpec::custom_density(frac_like_density(1.0));
    for (double u : {0.5, 2.0, 50.0}) {
        CHECK(phi_eval(spec, u) == doctest::Approx(std::sqrt(u)).epsilon(1e-6));
    }
}

TEST_CASE("phi is increasing and concave, vanishing at 0+") {
    for (const auto& spec :
         {BernsteinSpec::fractional(0.7), BernsteinSpec::relativistic(1.0, 1.2),
          BernsteinSpec::sum(0.5, 1.5), BernsteinSpec::log_tempered(1.0, 0.5, -1)}) {
        double prev = phi_eval(spec, 1e-6);
        for (double u = 0.01; u < 1e4; u *= 2.0) {
            const double cur = phi_eval(spec, u);
            CHECK(cur > prev);
            // midpoint concavity
            const double mid = phi_eval(spec, 1.5 * u);
            CHECK(mid >= 0.5 * (cur + phi_eval(spec, 2.0 * u)) - 1e-12);
            prev = cur;
        }
        CHECK(phi_eval(spec, 1e-8) < 0.05);
        CHECK(phi_eval(spec, 1e-8) > 0.0);
    }
}

TEST_CASE("levy density values") {
    const auto frac = levy_density(BernsteinSpec::fractional(1.0));
    CHECK(frac.density(1.0) == doctest::Approx(1.0 / (2.0 * kSqrtPi)).epsilon(1e-12));
    CHECK(frac.tail == TailClass::RegularlyVarying);
    CHECK(frac.alpha == doctest::Approx(1.0));

    const auto rel = levy_density(BernsteinSpec::relativistic(1.0, 1.0));
    CHECK(rel.density(1.0) ==
          doctest::Approx(std::exp(-1.0) / (2.0 * kSqrtPi)).epsilon(1e-12));
    CHECK(rel.tail == TailClass::ExponentiallyLight);
    CHECK(rel.eta == doctest::Approx(1.0));

    // exponential tilt: mu_rel(t) = e^{-eta t} mu_frac(t) exactly
    for (double t : {0.01, 1.0, 100.0, 1e4}) {
        CHECK(rel.density(t) ==
              doctest::Approx(std::exp(-t) * frac.density(t)).epsilon(1e-12));
    }
}

TEST_CASE("sum spec density adds the two stable densities") {
    const auto sum = levy_density(BernsteinSpec::sum(1.0, 0.5));
    const auto a = levy_density(BernsteinSpec::fractional(1.0));
    const auto b = levy_density(BernsteinSpec::fractional(0.5));
    for (double t : {0.1, 1.0, 10.0}) {
        CHECK(sum.density(t) ==
              doctest::Approx(a.density(t) + b.density(t)).epsilon(1e-12));
    }
    // heavy tail dominated by the smaller index
    CHECK(sum.alpha == doctest::Approx(0.5));
    CHECK(sum.tail == TailClass::RegularlyVarying);
}

TEST_CASE("log tempered exposes no density") {
    CHECK_THROWS(levy_density(BernsteinSpec::log_tempered(1.0, 0.5, -1)));
}

TEST_CASE("spec parsing grammar") {
    CHECK(parse_spec("frac:1.0").kind == BernsteinSpec::Kind::FractionalPower);
    CHECK(parse_spec("frac:0.5").alpha == doctest::Approx(0.5));
    const auto rel = parse_spec("rel:2.0,0.8");
    CHECK(rel.m == doctest::Approx(2.0));
    CHECK(rel.alpha == doctest::Approx(0.8));
    const auto sum = parse_spec("sum:1.2,0.4");
    CHECK(sum.alpha == doctest::Approx(1.2));
    CHECK(sum.beta == doctest::Approx(0.4));
    const auto lt = parse_spec("logt:1.0,0.5,-");
    CHECK(lt.log_sign == -1);
    CHECK(parse_spec("logt:1.0,0.5,+").log_sign == 1);
    CHECK_THROWS(parse_spec("frac:2.5"));
    CHECK_THROWS(parse_spec("nope:1"));
    CHECK_THROWS(parse_spec("rel:1.0"));
}

TEST_CASE("small-t bound check") {
    const auto frac = levy_density(BernsteinSpec::fractional(1.0));
    const double t0 = mu_small_t_bound_check(frac, 1.0);
    CHECK(t0 > 0.0);
    CHECK(t0 <= 1.0);
    // mu(t) = t^{-3} violates the t^{-2} bound everywhere near 0
    LevyDensity bad;
    bad.density = [](double t) { return std::pow(t, -3.0); };
    CHECK_THROWS(mu_small_t_bound_check(bad, 1.0));
}

TEST_CASE("integrability gate rejects t^{-3}") {
    LevyDensity bad;
    bad.density = [](double t) { return std::pow(t, -3.0); };
    bad.tail = TailClass::RegularlyVarying;
    bad.alpha = 1.0;
    CHECK_THROWS(BernsteinSpec::custom_density(bad));
}
