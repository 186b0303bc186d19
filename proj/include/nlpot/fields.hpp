#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <string>

namespace nlpot {

// Point in R^d, d <= 3; unused coordinates are zero.
using Point = std::array<double, 3>;

inline double norm(const Point& p) {
    return std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
}

struct ScalarField {
    int d = 1;
    bool radial = false;
    std::function<double(double)> profile;          // radial: rho(r)
    std::function<double(const Point&)> general;    // line fields (d = 1)
    double sup_norm = 1.0;
    std::string id;

    double operator()(const Point& x) const {
        return radial ? profile(norm(x)) : general(x);
    }

    // (1 + |x|^2)^{-kappa}
    static ScalarField poly_decay(double kappa, int d);
    // |x|^delta e^{-eta |x|^gamma}
    static ScalarField stretched_exp(double eta, double gamma, double delta, int d);
    // exp(-r^2 / (2 s^2))
    static ScalarField gaussian(double s, int d);
    // arbitrary bounded line field
    static ScalarField line(std::function<double(double)> f, double sup_norm,
                            std::string id = "line");
    // arbitrary radial field
    static ScalarField radial_profile(std::function<double(double)> rho, int d,
                                      double sup_norm, std::string id = "radial");
};

// Parse CLI field grammar: polydecay:<kappa>, stretched:<eta>,<gamma>,<delta>,
// gaussian:<s>, motiv:<kappa>,<l>
ScalarField parse_field(const std::string& text, int d);

double second_difference(const ScalarField& f, const Point& x, const Point& h);

}  // namespace nlpot
