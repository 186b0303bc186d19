#include "nlpot/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "nlpot/quadrature.hpp"

namespace nlpot {

std::vector<double> geometric_grid(double r_lo, double r_hi, int per_decade) {
    if (!(r_lo > 0.0 && r_hi > r_lo) || per_decade < 1)
        throw std::invalid_argument("geometric_grid: bad range");
    const int n = static_cast<int>(std::ceil(per_decade * std::log10(r_hi / r_lo))) + 1;
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
        g[i] = r_lo * std::pow(r_hi / r_lo, double(i) / (n - 1));
    g.back() = r_hi;
    return g;
}

PotentialTable reconstruct_potential(const BernsteinSpec& spec, const ScalarField& phi,
                                     const std::vector<double>& grid,
                                     const QuadratureConfig& cfg) {
    for (size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i] > grid[i - 1]))
            throw std::invalid_argument("reconstruct_potential: grid must increase");

    PotentialTable table;
    table.grid = grid;
    table.values.resize(grid.size());
    table.est_errors.resize(grid.size());
    table.spec = spec;
    table.field_id = phi.id;

    const JumpKernel kernel(spec, phi.d);
    auto work = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            const Point x = {grid[i], 0.0, 0.0};
            const double fx = phi(x);
            if (fx == 0.0)
                throw std::runtime_error("reconstruct_potential: phi vanishes on grid");
            const ApplyResult a = apply_with_kernel(kernel, phi, x, cfg);
            table.values[i] = -a.value / fx;
            table.est_errors[i] = a.est_error / std::abs(fx);
        }
    };

    const int nthreads = std::min<int>(worker_threads(), int(grid.size()));
    if (nthreads <= 1) {
        work(0, grid.size());
    } else {
        std::vector<std::thread> pool;
        const size_t chunk = (grid.size() + nthreads - 1) / nthreads;
        std::exception_ptr first_error;
        std::mutex err_mutex;
        for (int t = 0; t < nthreads; ++t) {
            const size_t b = t * chunk, e = std::min(grid.size(), b + chunk);
            if (b >= e) break;
            pool.emplace_back([&, b, e] {
                try {
                    work(b, e);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        if (first_error) std::rethrow_exception(first_error);
    }
    return table;
}

double predicted_decay_exponent(double kappa, int d, double alpha, bool* with_log) {
    if (with_log) *with_log = false;
    const double tol = 1e-12;
    if (std::abs(kappa - 0.5 * (d - alpha)) < tol) return -2.0 * alpha;
    if (std::abs(kappa - 0.5 * d) < tol) {
        if (with_log) *with_log = true;
        return -alpha;
    }
    if (kappa < 0.5 * d) return -alpha;
    return 2.0 * kappa - d - alpha;
}

AsymptoteReport fit_decay_exponent(const PotentialTable& table, double r_lo, double r_hi,
                                   bool with_log, double predicted) {
    AsymptoteReport rep;
    rep.window_lo = r_lo;
    rep.window_hi = r_hi;
    rep.predicted_exponent = predicted;
    rep.log_correction = with_log;

    std::vector<double> xs, ys;
    int pos = 0, neg = 0;
    for (size_t i = 0; i < table.grid.size(); ++i) {
        const double r = table.grid[i];
        if (r < r_lo || r > r_hi) continue;
        const double v = table.values[i];
        if (v > 0.0) ++pos;
        else if (v < 0.0) ++neg;
        else continue;
        double y = std::log(std::abs(v));
        if (with_log) y -= std::log(std::log(r));
        xs.push_back(std::log(r));
        ys.push_back(y);
    }
    if (pos > 0 && neg > 0) {
        rep.sign_change = true;
        rep.fitted_exponent = std::numeric_limits<double>::quiet_NaN();
        return rep;
    }
    const size_t n = xs.size();
    if (n < 3) throw std::invalid_argument("fit_decay_exponent: window too small");

    double sx = 0, sy = 0;
    for (size_t i = 0; i < n; ++i) { sx += xs[i]; sy += ys[i]; }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    const double slope = sxy / sxx;
    double ssr = 0;
    for (size_t i = 0; i < n; ++i) {
        const double resid = ys[i] - my - slope * (xs[i] - mx);
        ssr += resid * resid;
    }
    rep.fitted_exponent = slope;
    rep.exponent_stderr = std::sqrt(ssr / double(n - 2) / sxx);
    rep.verdict = std::abs(slope - predicted) <= 3.0 * rep.exponent_stderr + 0.1;
    return rep;
}

SignVerdict classify_sign(const PotentialTable& table, double R_tail) {
    int pos = 0, neg = 0;
    for (size_t i = 0; i < table.grid.size(); ++i) {
        if (table.grid[i] < R_tail) continue;
        const double v = table.values[i];
        if (std::abs(v) < 10.0 * table.est_errors[i]) continue;  // dead band
        (v > 0.0 ? pos : neg)++;
    }
    if (pos == 0 && neg == 0) return SignVerdict::Undetermined;
    if (pos > 0 && neg > 0) return SignVerdict::Mixed;
    return pos > 0 ? SignVerdict::Positive : SignVerdict::Negative;
}

double H_plus(double t, int d, double alpha, double kappa) {
    const double a = alpha, k = kappa;
    const double n1 = std::pow(1.0 - t, d - 2.0 * k) * std::pow(1.0 + t, 2.0 * k + a) *
                          std::pow(2.0 * k + a + 1.0, 2.0 * k + a) +
                      std::pow(2.0 * k + a, 2.0 * k + a) * std::pow(2.0 - t, d + a) *
                          (d - 2.0 * k);
    const double d1 = std::pow(2.0 - t, d + a) * std::pow(1.0 + t, 2.0 * k + a) *
                      (d - 2.0 * k) * std::pow(2.0 * k + a + 1.0, 2.0 * k + a);
    const double n2 = a * std::pow(1.0 - t, d + 2.0 * k + 2.0) * (2.0 - a) +
                      d * std::pow(t, double(d)) * (2.0 - a) * std::pow(1.0 - t, 2.0 * k + 2.0) +
                      2.0 * k * (2.0 * k + 1.0) * d * d * d * a * std::pow(t, d + 2.0);
    const double d2 = d * a * (2.0 - a) * std::pow(t, d + a) * std::pow(1.0 - t, 2.0 * k + 2.0);
    return n1 / d1 - n2 / d2;
}

double H_minus(double t, int d, double alpha, double kappa, double eta) {
    const double a = alpha, k = kappa, e = eta;
    const double h1 = 1.0 / ((d - 2.0 * k) * std::pow(t, d + a));
    const double h2 = 2.0 * k * (2.0 * k + 1.0) * d * d * std::pow(t, 2.0 - a) /
                      ((2.0 - a) * std::pow(1.0 - t, 2.0 * k + 2.0));
    const double ex = (2.0 * d * k + (d + e) * a) / (d + e);
    const double h3 = std::pow((2.0 * k * d + (d + e) * a) / ((d + e - 2.0 * k) * e),
                               2.0 * k / (d + e)) *
                      (d + e - 2.0 * k) / (2.0 * d * k + (d + e) * a) * std::pow(t, -ex);
    const double h4 = 1.0 / (a * std::pow(1.0 + t, a)) +
                      std::pow(1.0 - t, double(d)) / (d * std::pow(2.0 - t, d + a));
    return h1 + h2 + h3 - h4;
}

namespace {

// golden-section refinement of an extremum bracketed in [lo, hi]
double golden_opt(const std::function<double(double)>& f, double lo, double hi,
                  bool maximize, double tol) {
    const double gr = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        const bool pick_left = maximize ? (fc > fd) : (fc < fd);
        if (pick_left) {
            b = d; d = c; fd = fc;
            c = b - gr * (b - a); fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + gr * (b - a); fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

SignCriterion criterion_K(CriterionMode mode, int d, double alpha, double kappa,
                          std::optional<double> eta) {
    if (!(alpha > 0.0 && alpha < 2.0)) throw std::domain_error("criterion_K: alpha out of (0,2)");
    if (mode == CriterionMode::Plus) {
        if (!(kappa > 0.5 * (d - 1) && kappa < 0.5 * d))
            throw std::domain_error("criterion_K plus: kappa must lie in ((d-1)/2, d/2)");
    } else {
        if (!(kappa > 0.0 && kappa < 0.5 * d))
            throw std::domain_error("criterion_K minus: kappa must lie in (0, d/2)");
        if (!eta || !(*eta > 0.0))
            throw std::domain_error("criterion_K minus: eta must be positive");
    }
    const bool maximize = mode == CriterionMode::Plus;
    auto H = [&](double t) {
        return mode == CriterionMode::Plus ? H_plus(t, d, alpha, kappa)
                                           : H_minus(t, d, alpha, kappa, *eta);
    };
    double best_t = 0.5, best = H(0.5);
    for (int k = 1; k <= 999; ++k) {
        const double t = 1e-3 * k;
        const double v = H(t);
        if (!std::isfinite(v)) continue;
        if (maximize ? (v > best) : (v < best)) { best = v; best_t = t; }
    }
    const double lo = std::max(1e-9, best_t - 1e-3);
    const double hi = std::min(1.0 - 1e-9, best_t + 1e-3);
    const double topt = golden_opt(H, lo, hi, maximize, 1e-8);

    SignCriterion out;
    out.mode = mode;
    out.d = d;
    out.alpha = alpha;
    out.kappa = kappa;
    out.eta = eta;
    out.argopt_t = topt;
    out.K_value = H(topt);
    return out;
}

std::optional<double> criterion_threshold_search(CriterionMode mode, int d,
                                                 double alpha_or_kappa,
                                                 std::optional<double> eta) {
    if (mode == CriterionMode::Plus) {
        const double alpha = alpha_or_kappa;
        const double lo = 0.5 * (d - 1), hi = 0.5 * d;
        for (double kappa = lo + 1e-3; kappa < hi - 0.5e-3; kappa += 1e-3)
            if (H_plus(0.5, d, alpha, kappa) > 0.0) return kappa;
        return std::nullopt;
    }
    const double kappa = alpha_or_kappa;
    if (!eta) throw std::domain_error("threshold minus: eta required");
    auto G = [&](double alpha) { return H_minus(0.5, d, alpha, kappa, *eta); };
    if (!(G(1e-6) < 0.0)) return std::nullopt;  // no negative region at small alpha
    if (G(2.0 - 1e-9) < 0.0) return 2.0 - 1e-9;  // negative on the whole range
    double lo = 1e-6, hi = 2.0 - 1e-9;
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        (G(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {
bool envelope_params(const std::string& field_id, double& eta, double& gamma);
}

double lp_exponent_threshold(double kappa, double alpha, int d) {
    if (kappa > 0.5 * d) return d / (alpha + d - 2.0 * kappa);
    return d / alpha;
}

LpReport lp_tail_report(const PotentialTable& table, const std::vector<double>& p_values,
                        double kappa, double alpha, int d, double M) {
    LpReport rep;
    rep.p_star = lp_exponent_threshold(kappa, alpha, d);
    if (table.spec.kind == BernsteinSpec::Kind::Relativistic) {
        // exponentially light kernels: V = O(r^{-2}) regardless of kappa
        double s_eta, s_gamma;
        if (envelope_params(table.field_id, s_eta, s_gamma) && s_gamma < 1.0)
            rep.p_star = d / (2.0 * (1.0 - s_gamma));
        else
            rep.p_star = 0.5 * d;
    }
    rep.M = M;

    // tail decay slope from the outer decade of the table
    const double r_max = table.grid.back();
    const AsymptoteReport fit =
        fit_decay_exponent(table, std::max(M, r_max / 10.0), r_max, false,
                           predicted_decay_exponent(kappa, d, alpha));
    const double slope = fit.fitted_exponent;
    const double surf = d * omega_d(d);

    for (double p : p_values) {
        LpEntry e;
        e.p = p;
        double acc = 0.0;
        for (size_t i = 1; i < table.grid.size(); ++i) {
            const double r0 = table.grid[i - 1], r1 = table.grid[i];
            if (r1 < M) continue;
            const double f0 = std::pow(r0, d - 1) * std::pow(std::abs(table.values[i - 1]), p);
            const double f1 = std::pow(r1, d - 1) * std::pow(std::abs(table.values[i]), p);
            acc += 0.5 * (f0 + f1) * (r1 - r0);
        }
        e.tail_integral = surf * acc;
        e.finite_trend = d - 1.0 + p * slope < -1.0;  // integrand r^{d-1+p*slope}
        rep.entries.push_back(e);
    }
    return rep;
}

PinningRecord pinning_compare(const BernsteinSpec& spec, const ScalarField& phi_plus,
                              const ScalarField& phi_minus, std::optional<double> R_in,
                              const QuadratureConfig& cfg) {
    if (!phi_plus.radial || !phi_minus.radial || phi_plus.d != phi_minus.d)
        throw std::invalid_argument("pinning_compare: needs two radial fields, same d");
    const int d = phi_plus.d;
    const auto& rp = phi_plus.profile;
    const auto& rm = phi_minus.profile;
    const double a = rp(0.0);
    if (std::abs(rm(0.0) - a) > 1e-10 * std::abs(a))
        throw std::invalid_argument("pinning_compare: profiles disagree at 0");

    auto g = [&](double r) { return rp(r) - rm(r); };

    // locate the unique crossing (or detect identical profiles)
    double R;
    bool identical = true;
    {
        const auto probe = geometric_grid(1e-3, 1e4, 40);
        for (double r : probe)
            if (std::abs(g(r)) > 1e-14 * a) { identical = false; break; }
        if (identical) {
            R = R_in.value_or(1.0);
        } else {
            int crossings = 0;
            double lo = 0.0, hi = 0.0;
            for (size_t i = 1; i < probe.size(); ++i) {
                const double g0 = g(probe[i - 1]), g1 = g(probe[i]);
                if (g0 == 0.0) continue;
                if (g0 * g1 < 0.0) {
                    ++crossings;
                    lo = probe[i - 1];
                    hi = probe[i];
                }
            }
            if (crossings > 1)
                throw std::runtime_error("pinning_compare: profiles must cross at most once");
            if (crossings == 0) {
                // one profile dominates everywhere (crossing degenerates to
                // r = 0); the gap formula holds for any split radius
                R = R_in.value_or(1.0);
            } else {
                while ((hi - lo) > 1e-12 * hi) {
                    const double mid = 0.5 * (lo + hi);
                    (g(lo) * g(mid) <= 0.0 ? hi : lo) = mid;
                }
                R = 0.5 * (lo + hi);
                if (R_in) R = *R_in;
            }
        }
    }

    const JumpKernel kernel(spec, d);
    auto moment = [&](const std::function<double(double)>& rho, double lo, double hi) {
        return integrate_log_singular(
                   [&](double r) { return std::pow(r, d - 1) * rho(r) * kernel.eval(r); },
                   lo, hi, cfg.rel_tol)
            .value;
    };
    auto tail = [&](const std::function<double(double)>& rho) {
        return integrate_to_infinity(
                   [&](double r) { return std::pow(r, d - 1) * rho(r) * kernel.eval(r); },
                   R, cfg.rel_tol)
            .value;
    };

    PinningRecord rec;
    rec.R = R;
    rec.a = a;
    // the individual I integrals diverge at 0 (rho(0) = a > 0 against the
    // kernel singularity); report them truncated and keep the finite
    // difference on a cancellation-free route
    const double eps_cut = 1e-6 * R;
    rec.I_plus = moment(rp, eps_cut, R);
    rec.I_minus = moment(rm, eps_cut, R);
    rec.J_plus = tail(rp);
    rec.J_minus = tail(rm);
    rec.I_diff = integrate_log_singular(
                     [&](double r) {
                         return std::pow(r, d - 1) * (rm(r) - rp(r)) * kernel.eval(r);
                     },
                     0.0, R, cfg.rel_tol)
                     .value;
    rec.delta_V0 = d * omega_d(d) / a * (rec.I_diff - (rec.J_plus - rec.J_minus));
    return rec;
}

LocalShapeReport local_shape_check(const PotentialTable& table) {
    if (table.grid.empty() || table.grid.front() != 0.0)
        throw std::invalid_argument("local_shape_check: table must start at r = 0");
    LocalShapeReport rep;
    const double V0 = table.values.front();
    rep.V0_nonpositive = V0 <= 10.0 * table.est_errors.front();
    for (size_t i = 1; i < table.grid.size(); ++i) {
        if (!(table.values[i] > V0)) break;
        rep.r5 = table.grid[i];
    }
    rep.zero_is_local_min = rep.r5 > 0.0;
    return rep;
}

namespace {

// lower-envelope shape of the nondecay theorems: r^{-alpha} e^{eta(1-(1-C1)^gamma) r^gamma}
bool envelope_params(const std::string& field_id, double& eta, double& gamma) {
    auto colon = field_id.find(':');
    if (colon == std::string::npos) return false;
    const std::string head = field_id.substr(0, colon);
    const std::string rest = field_id.substr(colon + 1);
    if (head == "gaussian") {
        const double s = std::stod(rest);
        eta = 0.5 / (s * s);
        gamma = 2.0;
        return true;
    }
    if (head == "stretched") {
        const auto c1 = rest.find(',');
        const auto c2 = rest.find(',', c1 + 1);
        eta = std::stod(rest.substr(0, c1));
        gamma = std::stod(rest.substr(c1 + 1, c2 - c1 - 1));
        return true;
    }
    return false;
}

}  // namespace

NondecayReport nondecay_demo(const BernsteinSpec& spec, const ScalarField& phi,
                             const std::vector<double>& grid,
                             const QuadratureConfig& cfg) {
    NondecayReport rep;
    rep.table = reconstruct_potential(spec, phi, grid, cfg);
    const auto& v = rep.table.values;
    const size_t n = v.size();

    size_t k = n - 1;
    while (k > 0 && v[k] > v[k - 1]) --k;
    rep.growth_radius = rep.table.grid[k];
    rep.monotone_beyond = (n - k) >= 3;

    double eta, gamma;
    if (rep.monotone_beyond && envelope_params(phi.id, eta, gamma)) {
        const double c1 = 0.5;
        const double rate = eta * (1.0 - std::pow(1.0 - c1, gamma));
        auto env = [&](double r) {
            return std::pow(r, -spec.alpha) * std::exp(rate * std::pow(r, gamma));
        };
        // V can still be negative at the start of the monotone run (the well
        // around the origin); anchor the envelope at the first positive sample
        size_t k0 = k;
        while (k0 < n && !(v[k0] > 0.0)) ++k0;
        if (k0 < n) {
            rep.envelope_C = v[k0] / env(rep.table.grid[k0]);
            bool ok = rep.envelope_C > 0.0;
            for (size_t i = k0; i < n; ++i)
                ok = ok && v[i] >= 0.9 * rep.envelope_C * env(rep.table.grid[i]);
            rep.exceeds_envelope = ok;
        }
    }
    return rep;
}

}  // namespace nlpot
