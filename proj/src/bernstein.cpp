#include "nlpot/bernstein.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>
#include <stdexcept>

#include "nlpot/quadrature.hpp"

namespace nlpot {

namespace {

void check_alpha(double a) {
    if (!(a > 0.0 && a < 2.0))
        throw std::domain_error("alpha must lie in (0,2)");
}

// numeric check of int_0^1 t mu(t) dt + int_1^inf mu(t) dt on [1e-8, 1e8]:
// per-decade contributions must decay toward both endpoints
void check_levy_integrability(const LevyDensity& levy) {
    const auto& mu = levy.density;
    double prev = -1.0;
    for (int k = -8; k < 0; ++k) {
        const double lo = std::pow(10.0, k), hi = std::pow(10.0, k + 1);
        QuadResult q = integrate([&mu](double t) { return t * mu(t); }, lo, hi, 1e-8);
        if (!std::isfinite(q.value) || q.value < 0.0)
            throw std::domain_error("Levy density fails integrability check");
        if (prev >= 0.0 && k <= -5 && prev > q.value * (1.0 + 1e-9) && prev > 1e-12)
            throw std::domain_error("Levy density fails integrability check near 0");
        prev = q.value;
    }
    prev = -1.0;
    for (int k = 0; k < 8; ++k) {
        const double lo = std::pow(10.0, k), hi = std::pow(10.0, k + 1);
        QuadResult q = integrate([&mu](double t) { return mu(t); }, lo, hi, 1e-8);
        if (!std::isfinite(q.value) || q.value < 0.0)
            throw std::domain_error("Levy density fails integrability check");
        if (prev >= 0.0 && k >= 4 && q.value > prev * (1.0 - 1e-9) && q.value > 1e-12)
            throw std::domain_error("Levy density fails integrability check at infinity");
        prev = q.value;
    }
}

double frac_theta(double alpha) {
    return 0.5 * alpha / gamma_fn(1.0 - 0.5 * alpha);
}

}  // namespace

BernsteinSpec BernsteinSpec::fractional(double alpha) {
    check_alpha(alpha);
    BernsteinSpec s;
    s.kind = Kind::FractionalPower;
    s.alpha = alpha;
    return s;
}

BernsteinSpec BernsteinSpec::relativistic(double m, double alpha) {
    check_alpha(alpha);
    if (!(m > 0.0)) throw std::domain_error("relativistic spec needs m > 0");
    BernsteinSpec s;
    s.kind = Kind::Relativistic;
    s.alpha = alpha;
    s.m = m;
    return s;
}

BernsteinSpec BernsteinSpec::sum(double alpha, double beta) {
    check_alpha(alpha);
    check_alpha(beta);
    BernsteinSpec s;
    s.kind = Kind::Sum;
    s.alpha = alpha;
    s.beta = beta;
    return s;
}

BernsteinSpec BernsteinSpec::log_tempered(double alpha, double beta, int sign) {
    check_alpha(alpha);
    if (!(beta > 0.0)) throw std::domain_error("log_tempered spec needs beta > 0");
    if (sign != 1 && sign != -1) throw std::domain_error("log_tempered sign must be +-1");
    BernsteinSpec s;
    s.kind = Kind::LogTempered;
    s.alpha = alpha;
    s.beta = beta;
    s.log_sign = sign;
    return s;
}

BernsteinSpec BernsteinSpec::custom_density(LevyDensity levy) {
    check_levy_integrability(levy);
    BernsteinSpec s;
    s.kind = Kind::Custom;
    s.custom = std::move(levy);
    return s;
}

std::string BernsteinSpec::label() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::FractionalPower: os << "frac:" << alpha; break;
        case Kind::Relativistic: os << "rel:" << m << "," << alpha; break;
        case Kind::Sum: os << "sum:" << alpha << "," << beta; break;
        case Kind::LogTempered:
            os << "logt:" << alpha << "," << beta << "," << (log_sign > 0 ? '+' : '-');
            break;
        case Kind::Custom: os << "custom"; break;
    }
    return os.str();
}

BernsteinSpec parse_spec(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("bad spec string: " + text);
    const std::string head = text.substr(0, colon);
    std::vector<std::string> parts;
    {
        std::string rest = text.substr(colon + 1);
        std::istringstream is(rest);
        std::string tok;
        while (std::getline(is, tok, ',')) parts.push_back(tok);
    }
    auto num = [&](size_t i) { return std::stod(parts.at(i)); };
    if (head == "frac" && parts.size() == 1) return BernsteinSpec::fractional(num(0));
    if (head == "rel" && parts.size() == 2) return BernsteinSpec::relativistic(num(0), num(1));
    if (head == "sum" && parts.size() == 2) return BernsteinSpec::sum(num(0), num(1));
    if (head == "logt" && parts.size() == 3) {
        if (parts[2] != "+" && parts[2] != "-")
            throw std::invalid_argument("logt sign must be + or -");
        return BernsteinSpec::log_tempered(num(0), num(1), parts[2] == "+" ? 1 : -1);
    }
    throw std::invalid_argument("bad spec string: " + text);
}

double phi_eval(const BernsteinSpec& spec, double u, const Precision& prec) {
    if (!(u > 0.0)) throw std::domain_error("phi_eval: u must be positive");
    switch (spec.kind) {
        case BernsteinSpec::Kind::FractionalPower:
            return std::pow(u, 0.5 * spec.alpha);
        case BernsteinSpec::Kind::Relativistic: {
            const double eta = std::pow(spec.m, 2.0 / spec.alpha);
            return std::pow(u + eta, 0.5 * spec.alpha) - spec.m;
        }
        case BernsteinSpec::Kind::Sum:
            return std::pow(u, 0.5 * spec.alpha) + std::pow(u, 0.5 * spec.beta);
        case BernsteinSpec::Kind::LogTempered: {
            const double lg = std::pow(std::log1p(u), 0.5 * spec.beta);
            const double base = std::pow(u, 0.5 * spec.alpha);
            return spec.log_sign > 0 ? base * lg : base / lg;
        }
        case BernsteinSpec::Kind::Custom: {
            const auto& mu = spec.custom->density;
            const auto f = [&mu, u](double t) { return -std::expm1(-t * u) * mu(t); };
            QuadResult low = integrate_log_singular(f, 0.0, 1.0, prec.rel_tol * 1e2);
            QuadResult high = integrate_to_infinity(f, 1.0, prec.rel_tol * 1e2);
            return low.value + high.value;
        }
    }
    throw std::logic_error("phi_eval: unknown kind");
}

LevyDensity levy_density(const BernsteinSpec& spec) {
    switch (spec.kind) {
        case BernsteinSpec::Kind::FractionalPower: {
            LevyDensity l;
            const double a = spec.alpha;
            const double th = frac_theta(a);
            l.density = [a, th](double t) { return th * std::pow(t, -1.0 - 0.5 * a); };
            l.tail = TailClass::RegularlyVarying;
            l.alpha = a;
            l.theta = th;
            return l;
        }
        case BernsteinSpec::Kind::Relativistic: {
            LevyDensity l;
            const double a = spec.alpha;
            const double th = frac_theta(a);
            const double eta = std::pow(spec.m, 2.0 / a);
            l.density = [a, th, eta](double t) {
                return th * std::pow(t, -1.0 - 0.5 * a) * std::exp(-eta * t);
            };
            l.tail = TailClass::ExponentiallyLight;
            l.alpha = a;
            l.eta = eta;
            l.theta = th;
            return l;
        }
        case BernsteinSpec::Kind::Sum: {
            LevyDensity l;
            const double a = spec.alpha, b = spec.beta;
            const double tha = frac_theta(a), thb = frac_theta(b);
            l.density = [a, b, tha, thb](double t) {
                return tha * std::pow(t, -1.0 - 0.5 * a) +
                       thb * std::pow(t, -1.0 - 0.5 * b);
            };
            // the smaller index dominates the t -> infinity tail
            l.tail = TailClass::RegularlyVarying;
            l.alpha = std::min(a, b);
            l.theta = frac_theta(std::min(a, b));
            return l;
        }
        case BernsteinSpec::Kind::Custom:
            return *spec.custom;
        default:
            throw std::domain_error("levy_density: unsupported kind " + spec.label());
    }
}

double mu_small_t_bound_check(const LevyDensity& levy, double C) {
    // dense geometric grid on (1e-8, 1)
    const int n = 2000;
    std::vector<double> ts(n);
    for (int i = 0; i < n; ++i)
        ts[i] = std::pow(10.0, -8.0 + 8.0 * (i + 0.5) / n);
    int first_bad = n;
    for (int i = 0; i < n; ++i) {
        if (!(levy.density(ts[i]) <= C / (ts[i] * ts[i]))) {
            first_bad = i;
            break;
        }
    }
    if (first_bad == 0)
        throw std::runtime_error("mu_small_t_bound_check: no admissible t0 on sample");
    return ts[std::min(first_bad, n - 1)];
}

}  // namespace nlpot
