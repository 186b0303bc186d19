#include "nlpot/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "nlpot/quadrature.hpp"

namespace nlpot {

double omega_d(int d) {
    return std::pow(M_PI, 0.5 * d) / gamma_fn(0.5 * d + 1.0);
}

double fractional_kernel_constant(int d, double alpha) {
    return alpha * std::pow(2.0, alpha - 1.0) * gamma_fn(0.5 * (d + alpha)) /
           (std::pow(M_PI, 0.5 * d) * gamma_fn(1.0 - 0.5 * alpha));
}

namespace {

double relativistic_kernel(int d, double alpha, double m, double r, const Precision& prec) {
    const double nu = 0.5 * (d + alpha);
    const double mr = std::pow(m, 1.0 / alpha);
    const double c = std::pow(2.0, 0.5 * (alpha - d)) * std::pow(m, nu / alpha) * alpha /
                     (std::pow(M_PI, 0.5 * d) * gamma_fn(1.0 - 0.5 * alpha));
    return c * bessel_k(nu, mr * r, prec) / std::pow(r, nu);
}

}  // namespace

JumpKernel::JumpKernel(BernsteinSpec spec, int d, const Precision& prec)
    : spec_(std::move(spec)), d_(d), prec_(prec) {
    if (d < 1) throw std::domain_error("JumpKernel: d must be >= 1");
    levy_ = levy_density(spec_);
    closed_form_ = spec_.kind == BernsteinSpec::Kind::FractionalPower ||
                   spec_.kind == BernsteinSpec::Kind::Relativistic ||
                   spec_.kind == BernsteinSpec::Kind::Sum;
}

double JumpKernel::quadrature_eval(double r) const {
    if (!(r > 0.0)) throw std::domain_error("jump kernel: r must be positive");
    // substitution s = r^2/(4t) in the subordination integral
    const auto& mu = levy_.density;
    const double r2 = r * r;
    const double half_d = 0.5 * d_;
    const auto f = [&mu, r2, half_d](double s) {
        return std::pow(s, half_d - 2.0) * std::exp(-s) * mu(r2 / (4.0 * s));
    };
    QuadResult low = integrate_log_singular(f, 0.0, 1.0, prec_.rel_tol * 1e2);
    QuadResult high = integrate_to_infinity(f, 1.0, prec_.rel_tol * 1e2);
    return 0.25 / std::pow(M_PI, half_d) * std::pow(r, 2.0 - d_) *
           (low.value + high.value);
}

double JumpKernel::eval(double r, bool force_quadrature) const {
    if (!(r > 0.0)) throw std::domain_error("jump kernel: r must be positive");
    if (force_quadrature || !closed_form_) return quadrature_eval(r);
    switch (spec_.kind) {
        case BernsteinSpec::Kind::FractionalPower:
            return fractional_kernel_constant(d_, spec_.alpha) *
                   std::pow(r, -(d_ + spec_.alpha));
        case BernsteinSpec::Kind::Relativistic:
            return relativistic_kernel(d_, spec_.alpha, spec_.m, r, prec_);
        case BernsteinSpec::Kind::Sum:
            return fractional_kernel_constant(d_, spec_.alpha) *
                       std::pow(r, -(d_ + spec_.alpha)) +
                   fractional_kernel_constant(d_, spec_.beta) *
                       std::pow(r, -(d_ + spec_.beta));
        default:
            return quadrature_eval(r);
    }
}

double nu_tail(const JumpKernel& k, double R) {
    if (!(R > 0.0)) throw std::domain_error("nu_tail: R must be positive");
    const int d = k.dim();
    QuadResult q = integrate_to_infinity(
        [&k, d](double r) { return k.eval(r) * std::pow(r, d - 1); }, R, 1e-10);
    return d * omega_d(d) * q.value;
}

double second_moment_J(const JumpKernel& k, double R) {
    if (!(R > 0.0)) throw std::domain_error("second_moment_J: R must be positive");
    const int d = k.dim();
    QuadResult q = integrate_log_singular(
        [&k, d](double r) { return k.eval(r) * std::pow(r, d + 1); }, 0.0, R, 1e-10);
    return d * omega_d(d) * q.value;
}

double moment_J_beta(const JumpKernel& k, double omega, double R) {
    if (!(R > 0.0)) throw std::domain_error("moment_J_beta: R must be positive");
    // j ~ r^{-d-alpha} near 0 for both classified tails, so the radial
    // integrand behaves like r^{omega-1-alpha}
    const double a = k.levy().alpha;
    if (k.levy().tail != TailClass::Unclassified && omega <= a)
        throw std::domain_error("moment_J_beta: integral diverges for omega <= alpha");
    const int d = k.dim();
    QuadResult q = integrate_log_singular(
        [&k, d, omega](double r) {
            return k.eval(r) * std::pow(r, omega) * std::pow(r, d - 1);
        },
        0.0, R, 1e-10, 24);
    return d * omega_d(d) * q.value;
}

double lp_tail_norm(const JumpKernel& k, double p, double R) {
    if (!(p > 1.0)) throw std::domain_error("lp_tail_norm: p must exceed 1");
    if (!(R > 0.0)) throw std::domain_error("lp_tail_norm: R must be positive");
    const int d = k.dim();
    QuadResult q = integrate_to_infinity(
        [&k, d, p](double r) { return std::pow(k.eval(r), p) * std::pow(r, d - 1); },
        R, 1e-10);
    return std::pow(d * omega_d(d) * q.value, 1.0 / p);
}

KernelAsymptoteReport asymptote_validate(const JumpKernel& k) {
    const LevyDensity& levy = k.levy();
    if (levy.tail == TailClass::Unclassified)
        throw std::domain_error("asymptote_validate: unclassified tail");
    KernelAsymptoteReport rep;
    rep.tail = levy.tail;
    const int d = k.dim();
    const double a = levy.alpha;
    if (levy.tail == TailClass::RegularlyVarying) {
        rep.exact_constant = levy.theta * std::pow(2.0, a) * gamma_fn(0.5 * (d + a)) /
                             std::pow(M_PI, 0.5 * d);
        rep.printed_constant = 0.5 * rep.exact_constant;
        for (double r : {10.0, 30.0, 100.0}) {
            AsymptoteProbe p;
            p.r = r;
            p.measured = k.eval(r) * std::pow(r, d + a) / levy.ell_hat(r * r);
            p.ratio_printed = p.measured / rep.printed_constant;
            p.ratio_exact = p.measured / rep.exact_constant;
            rep.probes.push_back(p);
        }
    } else {
        const double eta = levy.eta;
        rep.printed_constant = levy.theta * std::pow(M_PI, 0.5 * (1.0 - d)) *
                               std::pow(2.0, 0.5 * (a - 1.0 - d)) *
                               std::pow(eta, 0.25 * (d + a + 2.0));
        rep.exact_constant = 2.0 * rep.printed_constant;
        for (double r : {20.0, 40.0, 60.0}) {
            AsymptoteProbe p;
            p.r = r;
            p.measured = k.eval(r) * std::pow(r, 0.5 * (d + a + 1.0)) *
                         std::exp(std::sqrt(eta) * r);
            p.ratio_printed = p.measured / rep.printed_constant;
            p.ratio_exact = p.measured / rep.exact_constant;
            rep.probes.push_back(p);
        }
    }
    return rep;
}

SigmaKernel::SigmaKernel(double m, double alpha, int d, const Precision& prec)
    : m_(m), alpha_(alpha), d_(d), prec_(prec) {
    if (!(m > 0.0)) throw std::domain_error("SigmaKernel: m must be positive");
    if (!(alpha > 0.0 && alpha < 2.0)) throw std::domain_error("SigmaKernel: alpha in (0,2)");
    if (d < 1) throw std::domain_error("SigmaKernel: d must be >= 1");
    nu_ = 0.5 * (d + alpha);
    eta_root_ = std::pow(m, 1.0 / alpha);
    prefactor_ = alpha * std::pow(2.0, -0.5 * (d - alpha)) /
                 (gamma_fn(1.0 - 0.5 * alpha) * std::pow(M_PI, 0.5 * d));
}

double SigmaKernel::asymptote_constant() const {
    return fractional_kernel_constant(d_, alpha_);
}

double SigmaKernel::eval_bessel_diff(double r) const {
    const double full = std::pow(2.0, nu_ - 1.0) * gamma_fn(nu_);
    const double x = eta_root_ * r;
    double tail = 0.0;
    if (x < 650.0) tail = std::pow(x, nu_) * bessel_k(nu_, x, prec_);
    return prefactor_ * (full - tail) / std::pow(r, 2.0 * nu_);
}

double SigmaKernel::eval_w_integral(double r) const {
    const double x = eta_root_ * r;
    const double upper = std::min(x, 60.0 + 4.0 * nu_);
    const auto f = [this](double w) { return std::pow(w, nu_) * bessel_k(nu_ - 1.0, w, prec_); };
    QuadResult q = integrate_log_singular(f, 0.0, upper, 1e-11);
    return prefactor_ * q.value / std::pow(r, 2.0 * nu_);
}

double SigmaKernel::eval(double r) const {
    if (!(r > 0.0)) throw std::domain_error("sigma: r must be positive");
    const double x = eta_root_ * r;
    if (x >= 30.0) return eval_bessel_diff(r);
    const double w = eval_w_integral(r);
    if (x > 1.0) {
        const double b = eval_bessel_diff(r);
        if (std::fabs(b - w) > 1e-6 * std::fabs(w))
            throw std::runtime_error("sigma representations disagree");
    }
    return w;
}

double sigma_total_mass(const SigmaKernel& s) {
    const int d = s.dim();
    const double split = 1.0 / std::pow(s.m(), 1.0 / s.alpha());
    const auto f = [&s, d](double r) { return s.eval(r) * std::pow(r, d - 1); };
    QuadResult low = integrate_log_singular(f, 0.0, split, 1e-9);
    QuadResult high = integrate_to_infinity(f, split, 1e-9);
    return d * omega_d(d) * (low.value + high.value);
}

double sigma_tail_mass(const SigmaKernel& s, double R) {
    const int d = s.dim();
    QuadResult q = integrate_to_infinity(
        [&s, d](double r) { return s.eval(r) * std::pow(r, d - 1); }, R, 1e-9);
    return d * omega_d(d) * q.value;
}

double sigma_second_moment(const SigmaKernel& s, double R) {
    const int d = s.dim();
    QuadResult q = integrate_log_singular(
        [&s, d](double r) { return s.eval(r) * std::pow(r, d + 1); }, 0.0, R, 1e-9);
    return d * omega_d(d) * q.value;
}

double sigma_lp_tail(const SigmaKernel& s, double p, double R) {
    if (!(p > 1.0)) throw std::domain_error("sigma_lp_tail: p must exceed 1");
    const int d = s.dim();
    QuadResult q = integrate_to_infinity(
        [&s, d, p](double r) { return std::pow(s.eval(r), p) * std::pow(r, d - 1); },
        R, 1e-9);
    return std::pow(d * omega_d(d) * q.value, 1.0 / p);
}

SigmaReport sigma_report(const SigmaKernel& s, double R) {
    SigmaReport rep;
    const int d = s.dim();
    const double a = s.alpha();
    const double dw = d * omega_d(d);
    const double gfac =
        gamma_fn(0.5 * (a + d)) / (gamma_fn(1.0 - 0.5 * a) * std::pow(M_PI, 0.5 * d));
    rep.mass = sigma_total_mass(s);

    const double tail_printed = dw * std::pow(2.0, a) * gfac * std::pow(R, -a);
    rep.tail_ratio_printed = sigma_tail_mass(s, R) / tail_printed;
    rep.tail_ratio_exact = 2.0 * rep.tail_ratio_printed;

    const double mom_printed =
        dw * a * std::pow(2.0, a) * gfac / (2.0 - a) * std::pow(R, 2.0 - a);
    rep.second_moment_ratio_printed = sigma_second_moment(s, R) / mom_printed;
    rep.second_moment_ratio_exact = 2.0 * rep.second_moment_ratio_printed;

    const double p = 2.0, q = 2.0;
    const double lp_printed = std::pow(dw / ((p - 1.0) * d + p * a), 1.0 / p) * a *
                              std::pow(2.0, a) * gfac * std::pow(R, -d / q - a);
    rep.lp_ratio_printed = sigma_lp_tail(s, p, R) / lp_printed;
    rep.lp_ratio_exact = 2.0 * rep.lp_ratio_printed;

    // locate the smallest radius whose [R*, 4R*] window is strictly decreasing
    for (double cand = 0.125 / s.m(); cand < 1e4; cand *= 2.0) {
        bool dec = true;
        double prev = s.eval(cand);
        for (int i = 1; i <= 64; ++i) {
            const double r = cand * std::pow(4.0, i / 64.0);
            const double v = s.eval(r);
            if (!(v < prev)) {
                dec = false;
                break;
            }
            prev = v;
        }
        if (dec) {
            rep.decreasing_window_R = cand;
            rep.decreasing_on_window = true;
            break;
        }
    }
    return rep;
}

}  // namespace nlpot
