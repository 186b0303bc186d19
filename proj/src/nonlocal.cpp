#include "nlpot/nonlocal.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "nlpot/quadrature.hpp"

namespace nlpot {

namespace {

std::atomic<int> g_threads{1};

// Angular average of the symmetric second difference over the sphere of
// radius rho:  A(rho) = int_{S^{d-1}} [f(x + rho w) - 2 f(x) + f(x - rho w)] dw.
// Quadratic in rho near 0 for smooth f, which is what makes the singular
// segment of the radial integral tame.
class AngularAverager {
public:
    AngularAverager(const ScalarField& f, const Point& x, int angular_nodes)
        : f_(f), x_(x), fx_(f(x)), r_(norm(x)) {
        if (f.d == 1) return;
        gauss_legendre(angular_nodes, nodes_, weights_);
    }

    double operator()(double rho) const {
        const int d = f_.d;
        if (d == 1) {
            if (f_.radial) {
                const double fp = f_.profile(std::abs(r_ + rho));
                const double fm = f_.profile(std::abs(r_ - rho));
                return 2.0 * (fp + fm - 2.0 * fx_);
            }
            const Point xp = {x_[0] + rho, 0.0, 0.0};
            const Point xm = {x_[0] - rho, 0.0, 0.0};
            return 2.0 * (f_.general(xp) + f_.general(xm) - 2.0 * fx_);
        }
        if (!f_.radial)
            throw std::invalid_argument("non-radial fields are only supported in d = 1");
        // |x + rho w|^2 = r^2 + 2 r rho u + rho^2 with u = cos(angle(x, w));
        // the +-w pairing makes only f(u) + f(-u) enter.
        double acc = 0.0;
        if (d == 2) {
            // int_{S^1} g(cos theta) dtheta = 2 int_0^pi g(cos theta) dtheta,
            // Gauss-Legendre in theta on [0, pi]
            for (size_t i = 0; i < nodes_.size(); ++i) {
                const double theta = 0.5 * kPi * (nodes_[i] + 1.0);
                const double u = std::cos(theta);
                acc += weights_[i] * (radial_at(rho, u) + radial_at(rho, -u));
            }
            acc *= 0.5 * kPi;            // scale dtheta
            return 2.0 * acc - 2.0 * (2.0 * kPi) * fx_;
        }
        // d == 3: int_{S^2} g dw = 2 pi int_{-1}^{1} g(u) du, and the +-w
        // pairing doubles the f term
        for (size_t i = 0; i < nodes_.size(); ++i)
            acc += weights_[i] * radial_at(rho, nodes_[i]);
        return 4.0 * kPi * acc - 2.0 * (4.0 * kPi) * fx_;
    }

private:
    static constexpr double kPi = 3.14159265358979323846;

    double radial_at(double rho, double u) const {
        const double s2 = r_ * r_ + 2.0 * r_ * rho * u + rho * rho;
        return f_.profile(std::sqrt(std::max(s2, 0.0)));
    }

    const ScalarField& f_;
    const Point& x_;
    double fx_, r_;
    std::vector<double> nodes_, weights_;
};

// (1/2) int_{R^d} D_h f(x) k(|h|) dh  =  (1/2) int_0^inf rho^{d-1} k(rho) A(rho) drho
ApplyResult half_second_difference_integral(const std::function<double(double)>& kernel,
                                            const ScalarField& f, const Point& x,
                                            const QuadratureConfig& cfg,
                                            double kernel_tail_scale) {
    const int d = f.d;
    const double R = cfg.split_radius_R;
    const AngularAverager A(f, x, cfg.angular_nodes);

    double value = 0.0, err = 0.0;

    // [0, rho0]: direct evaluation of A loses all digits to cancellation, so
    // fit the quadratic coefficient by Richardson and integrate it against the
    // explicit kernel weight.
    const double rho0 = 1e-4 * std::min(R, 1.0);
    const double a2 = (16.0 * A(0.5 * rho0) - A(rho0)) / (3.0 * rho0 * rho0);
    {
        const auto w = integrate_log_singular(
            [&](double rho) { return std::pow(rho, d + 1) * kernel(rho); },
            0.0, rho0, cfg.rel_tol);
        value += a2 * w.value;
        err += std::abs(a2) * w.abs_err;
        // rounding noise in a2 plus the dropped quartic term
        err += 4e-16 * f.sup_norm / (rho0 * rho0) * std::abs(w.value);
    }

    const auto integrand = [&](double rho) {
        return std::pow(rho, d - 1) * kernel(rho) * A(rho);
    };

    // [rho0, R]: log-spaced panels toward the still-steep kernel
    {
        const auto mid = integrate_log_singular(integrand, rho0, R, cfg.rel_tol);
        value += mid.value;
        err += mid.abs_err;
    }

    // [R, inf): doubling panels; stop once past tail_factor * max(R, |x|) and
    // the panels have gone quiet.
    const double reach = cfg.tail_factor * std::max(R, norm(x));
    double lo = R, len = R;
    int quiet = 0;
    double tail_end = R;
    for (int k = 0; k < 200; ++k) {
        const auto p = integrate(integrand, lo, lo + len, cfg.rel_tol,
                                 cfg.rel_tol * std::abs(value));
        value += p.value;
        err += p.abs_err;
        lo += len;
        len *= 2.0;
        tail_end = lo;
        if (std::abs(p.value) <= cfg.rel_tol * std::max(std::abs(value), 1e-300))
            ++quiet;
        else
            quiet = 0;
        if (lo >= reach && quiet >= 3) break;
        if (k == 199)
            throw std::runtime_error("tail integral failed to settle");
    }

    // truncation remainder: |A| <= 4 |S^{d-1}| sup|f| beyond the last panel,
    // with a factor-2 geometric cushion on the one-panel kernel mass
    {
        const double surf = d * omega_d(d);
        const auto m = gk15([&](double rho) { return std::pow(rho, d - 1) * kernel(rho); },
                            tail_end, 2.0 * tail_end);
        err += 4.0 * surf * f.sup_norm * 2.0 * std::abs(m.value) * kernel_tail_scale;
    }

    return {0.5 * value, 0.5 * err};
}

}  // namespace

int worker_threads() { return g_threads.load(); }
void set_worker_threads(int n) { g_threads.store(std::max(1, n)); }

ApplyResult apply_with_kernel(const JumpKernel& k, const ScalarField& f,
                              const Point& x, const QuadratureConfig& cfg) {
    if (k.dim() != f.d) throw std::invalid_argument("kernel/field dimension mismatch");
    auto res = half_second_difference_integral(
        [&k](double rho) { return k.eval(rho); }, f, x, cfg, 1.0);
    res.value = -res.value;
    return res;
}

ApplyResult apply_nonlocal_full(const BernsteinSpec& spec, const ScalarField& f,
                                const Point& x, const QuadratureConfig& cfg) {
    const JumpKernel k(spec, f.d);
    return apply_with_kernel(k, f, x, cfg);
}

double apply_nonlocal(const BernsteinSpec& spec, const ScalarField& f,
                      const Point& x, const QuadratureConfig& cfg) {
    return apply_nonlocal_full(spec, f, x, cfg).value;
}

ApplyResult apply_g_operator_full(double m, double alpha, const ScalarField& f,
                                  const Point& x, const QuadratureConfig& cfg) {
    const SigmaKernel s(m, alpha, f.d);
    auto res = half_second_difference_integral(
        [&s](double rho) { return s.eval(rho); }, f, x, cfg, 1.0);
    res.value = -res.value;
    return res;
}

double apply_g_operator(double m, double alpha, const ScalarField& f,
                        const Point& x, const QuadratureConfig& cfg) {
    return apply_g_operator_full(m, alpha, f, x, cfg).value;
}

double estimate_zygmund_L(const ScalarField& f, const Point& x, double R,
                          int n_samples) {
    if (!(R > 0.0) || n_samples < 2) throw std::invalid_argument("bad zygmund window");
    const double h_min = 1e-3 * R;   // below this D_h f is rounding noise
    double best = 0.0;
    for (int i = 0; i < n_samples; ++i) {
        const double h = h_min * std::pow(R / h_min, double(i) / (n_samples - 1));
        // probe a few directions; for radial fields the axis directions carry
        // the extreme increments, the oblique ones guard line fields in d = 1
        const int n_dirs = f.d == 1 ? 1 : 8;
        for (int kdir = 0; kdir < n_dirs; ++kdir) {
            Point hv = {h, 0.0, 0.0};
            if (f.d > 1) {
                const double th = 3.14159265358979323846 * kdir / n_dirs;
                hv = {h * std::cos(th), h * std::sin(th), 0.0};
            }
            const double ratio = std::abs(second_difference(f, x, hv)) / (h * h);
            best = std::max(best, ratio);
        }
    }
    if (best > 1e12) return std::numeric_limits<double>::infinity();
    return best;
}

}  // namespace nlpot
