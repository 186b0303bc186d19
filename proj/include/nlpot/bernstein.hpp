#pragma once

#include <functional>
#include <optional>
#include <string>

#include "nlpot/specfun.hpp"

namespace nlpot {

enum class TailClass { RegularlyVarying, ExponentiallyLight, Unclassified };

struct LevyDensity {
    std::function<double(double)> density;
    TailClass tail = TailClass::Unclassified;
    // RegularlyVarying: mu(t) ~ theta * t^{-1-alpha/2} * slowly_varying(t)
    // ExponentiallyLight: mu(t) ~ theta * t^{-1-alpha/2} * e^{-eta t}
    double alpha = 0.0;
    double eta = 0.0;
    double theta = 0.0;
    std::function<double(double)> slowly_varying;  // ell-hat(t), defaults to 1
    bool warn_ratio = false;  // set when the prop1 ratio check is skipped/failed on Custom

    double ell_hat(double t) const { return slowly_varying ? slowly_varying(t) : 1.0; }
};

struct BernsteinSpec {
    enum class Kind { FractionalPower, Relativistic, Sum, LogTempered, Custom };
    Kind kind = Kind::FractionalPower;
    double alpha = 1.0;   // in (0,2)
    double beta = 0.0;    // Sum / LogTempered second exponent
    double m = 0.0;       // Relativistic mass
    int log_sign = +1;    // LogTempered: +1 -> (log(1+u))^{+beta/2}, -1 -> ^{-beta/2}
    std::optional<LevyDensity> custom;

    static BernsteinSpec fractional(double alpha);
    static BernsteinSpec relativistic(double m, double alpha);
    static BernsteinSpec sum(double alpha, double beta);
    static BernsteinSpec log_tempered(double alpha, double beta, int sign);
    static BernsteinSpec custom_density(LevyDensity levy);

    std::string label() const;
};

// Parse the CLI grammar: frac:<a>, rel:<m>,<a>, sum:<a>,<b>, logt:<a>,<b>,<+|->
BernsteinSpec parse_spec(const std::string& text);

double phi_eval(const BernsteinSpec& spec, double u, const Precision& prec = {});

// Levy density of the spec; throws for LogTempered which only exposes Phi.
LevyDensity levy_density(const BernsteinSpec& spec);

// Largest sampled t0 < 1 with mu(t) <= C t^{-2} for all sampled t < t0.
// Throws std::runtime_error when no admissible t0 exists on the sample.
double mu_small_t_bound_check(const LevyDensity& levy, double C);

}  // namespace nlpot
