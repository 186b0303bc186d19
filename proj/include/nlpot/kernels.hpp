#pragma once

#include <vector>

#include "nlpot/bernstein.hpp"
#include "nlpot/specfun.hpp"

namespace nlpot {

// volume of the unit ball in R^d
double omega_d(int d);

class JumpKernel {
public:
    JumpKernel(BernsteinSpec spec, int d, const Precision& prec = {});

    double eval(double r, bool force_quadrature = false) const;
    double quadrature_eval(double r) const;
    bool has_closed_form() const { return closed_form_; }

    const BernsteinSpec& spec() const { return spec_; }
    const LevyDensity& levy() const { return levy_; }
    int dim() const { return d_; }
    const Precision& precision() const { return prec_; }

private:
    BernsteinSpec spec_;
    LevyDensity levy_;
    int d_;
    Precision prec_;
    bool closed_form_ = false;
};

// exact prefactor of the fractional kernel: j(r) = fractional_kernel_constant * r^{-d-alpha}
double fractional_kernel_constant(int d, double alpha);

double nu_tail(const JumpKernel& k, double R);
double second_moment_J(const JumpKernel& k, double R);
double moment_J_beta(const JumpKernel& k, double omega, double R);
double lp_tail_norm(const JumpKernel& k, double p, double R);

struct AsymptoteProbe {
    double r = 0.0;
    double measured = 0.0;      // j(r) scaled by the predicted shape
    double ratio_printed = 0.0; // measured / printed constant
    double ratio_exact = 0.0;   // measured / exact constant (2x printed)
};

struct KernelAsymptoteReport {
    TailClass tail = TailClass::Unclassified;
    double printed_constant = 0.0;
    double exact_constant = 0.0;
    std::vector<AsymptoteProbe> probes;
};

KernelAsymptoteReport asymptote_validate(const JumpKernel& k);

class SigmaKernel {
public:
    SigmaKernel(double m, double alpha, int d, const Precision& prec = {});

    // mass-consistent normalization: sigma = j_{0,alpha} - j_{m,alpha}
    double eval(double r) const;
    double eval_w_integral(double r) const;
    double eval_bessel_diff(double r) const;

    double m() const { return m_; }
    double alpha() const { return alpha_; }
    int dim() const { return d_; }

    // sigma(r) ~ sigma_asymptote_constant * r^{-d-alpha} (exact normalization)
    double asymptote_constant() const;

private:
    double m_, alpha_;
    int d_;
    Precision prec_;
    double prefactor_;  // alpha 2^{-(d-alpha)/2} / (Gamma(1-alpha/2) pi^{d/2})
    double eta_root_;   // m^{1/alpha}
    double nu_;         // (d+alpha)/2
};

double sigma_total_mass(const SigmaKernel& s);
double sigma_tail_mass(const SigmaKernel& s, double R);          // Sigma(B_R^c)
double sigma_second_moment(const SigmaKernel& s, double R);      // Sigma^(2)(B_R)
double sigma_lp_tail(const SigmaKernel& s, double p, double R);

struct SigmaReport {
    double mass = 0.0;
    double tail_ratio_printed = 0.0, tail_ratio_exact = 0.0;
    double second_moment_ratio_printed = 0.0, second_moment_ratio_exact = 0.0;
    double lp_ratio_printed = 0.0, lp_ratio_exact = 0.0;
    double decreasing_window_R = 0.0;
    bool decreasing_on_window = false;
};

// mass + corSigma asymptote ratios at radius R (p = 2) + sigmadecrease window scan
SigmaReport sigma_report(const SigmaKernel& s, double R);

}  // namespace nlpot
