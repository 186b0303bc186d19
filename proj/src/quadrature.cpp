#include "nlpot/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace nlpot {

namespace {

// QUADPACK G7-K15 rule, positive half.
const double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

const double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

const double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

}  // namespace

QuadResult gk15(const Integrand& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double hl = 0.5 * (b - a);
    const double fc = f(c);
    double k = kWgk[7] * fc;
    double g = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = hl * kXgk[i];
        const double fs = f(c - dx) + f(c + dx);
        k += kWgk[i] * fs;
        if (i % 2 == 1) g += kWg[i / 2] * fs;
    }
    QuadResult r;
    r.value = k * hl;
    const double diff = std::fabs((k - g) * hl);
    r.abs_err = std::min(diff, std::pow(200.0 * diff, 1.5));
    if (!std::isfinite(r.abs_err)) r.abs_err = diff;
    return r;
}

QuadResult integrate(const Integrand& f, double a, double b,
                     double rel_tol, double abs_tol, int max_intervals) {
    if (a == b) return {};
    struct Seg {
        double a, b, value, err;
        bool operator<(const Seg& o) const { return err < o.err; }
    };
    std::priority_queue<Seg> heap;
    QuadResult first = gk15(f, a, b);
    heap.push({a, b, first.value, first.abs_err});
    double total = first.value, total_err = first.abs_err;
    int n = 1;
    while (n < max_intervals) {
        const double goal = std::max(abs_tol, rel_tol * std::fabs(total));
        if (total_err <= goal) break;
        Seg s = heap.top();
        heap.pop();
        const double mid = 0.5 * (s.a + s.b);
        if (mid == s.a || mid == s.b) {
            // interval at machine resolution, accept as is
            heap.push({s.a, s.b, s.value, 0.0});
            total_err -= s.err;
            continue;
        }
        QuadResult l = gk15(f, s.a, mid);
        QuadResult r = gk15(f, mid, s.b);
        total += l.value + r.value - s.value;
        total_err += l.abs_err + r.abs_err - s.err;
        heap.push({s.a, mid, l.value, l.abs_err});
        heap.push({mid, s.b, r.value, r.abs_err});
        ++n;
    }
    return {total, total_err};
}

QuadResult integrate_log_singular(const Integrand& f, double a, double b,
                                  double rel_tol, int decades) {
    if (b <= a) return {};
    QuadResult acc;
    double hi = b;
    for (int k = 0; k < decades; ++k) {
        double lo = b * std::pow(10.0, -(k + 1));
        if (a > lo) lo = a;
        QuadResult p = integrate(f, lo, hi, rel_tol);
        acc.value += p.value;
        acc.abs_err += p.abs_err;
        hi = lo;
        if (lo <= a) return acc;
        if (k > 2 && std::fabs(p.value) < 0.1 * rel_tol * std::fabs(acc.value)) break;
    }
    if (hi > a && a > 0.0) {
        QuadResult p = integrate(f, a, hi, rel_tol);
        acc.value += p.value;
        acc.abs_err += p.abs_err;
    }
    return acc;
}

QuadResult integrate_to_infinity(const Integrand& f, double a,
                                 double rel_tol, double first_len) {
    double len = first_len > 0.0 ? first_len : std::max(1.0, std::fabs(a));
    double lo = a;
    QuadResult acc;
    int quiet = 0;
    for (int k = 0; k < 400; ++k) {
        const double hi = lo + len;
        QuadResult p = integrate(f, lo, hi, rel_tol);
        acc.value += p.value;
        acc.abs_err += p.abs_err;
        if (std::fabs(p.value) < rel_tol * std::fabs(acc.value) ||
            (acc.value == 0.0 && std::fabs(p.value) < 1e-300)) {
            if (++quiet >= 3) return acc;
        } else {
            quiet = 0;
        }
        lo = hi;
        len *= 2.0;
    }
    throw std::runtime_error("integrate_to_infinity: tail did not settle");
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
}

}  // namespace nlpot
