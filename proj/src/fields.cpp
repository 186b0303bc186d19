#include "nlpot/fields.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace nlpot {

ScalarField ScalarField::poly_decay(double kappa, int d) {
    if (!(kappa > 0.0)) throw std::domain_error("poly_decay: kappa must be positive");
    ScalarField f;
    f.d = d;
    f.radial = true;
    f.profile = [kappa](double r) { return std::pow(1.0 + r * r, -kappa); };
    f.sup_norm = 1.0;
    std::ostringstream os;
    os << "polydecay:" << kappa;
    f.id = os.str();
    return f;
}

ScalarField ScalarField::stretched_exp(double eta, double gamma, double delta, int d) {
    if (!(eta > 0.0 && gamma > 0.0) || delta < 0.0)
        throw std::domain_error("stretched_exp: bad parameters");
    ScalarField f;
    f.d = d;
    f.radial = true;
    f.profile = [eta, gamma, delta](double r) {
        if (r == 0.0) return delta == 0.0 ? 1.0 : 0.0;
        return std::pow(r, delta) * std::exp(-eta * std::pow(r, gamma));
    };
    // max of r^delta e^{-eta r^gamma} at r = (delta/(eta gamma))^{1/gamma}
    double sup = 1.0;
    if (delta > 0.0) {
        const double rm = std::pow(delta / (eta * gamma), 1.0 / gamma);
        sup = std::pow(rm, delta) * std::exp(-eta * std::pow(rm, gamma));
    }
    f.sup_norm = sup;
    std::ostringstream os;
    os << "stretched:" << eta << "," << gamma << "," << delta;
    f.id = os.str();
    return f;
}

ScalarField ScalarField::gaussian(double s, int d) {
    if (!(s > 0.0)) throw std::domain_error("gaussian: s must be positive");
    ScalarField f;
    f.d = d;
    f.radial = true;
    f.profile = [s](double r) { return std::exp(-0.5 * r * r / (s * s)); };
    f.sup_norm = 1.0;
    std::ostringstream os;
    os << "gaussian:" << s;
    f.id = os.str();
    return f;
}

ScalarField ScalarField::line(std::function<double(double)> fn, double sup_norm,
                              std::string id) {
    ScalarField f;
    f.d = 1;
    f.radial = false;
    f.general = [fn = std::move(fn)](const Point& x) { return fn(x[0]); };
    f.sup_norm = sup_norm;
    f.id = std::move(id);
    return f;
}

ScalarField ScalarField::radial_profile(std::function<double(double)> rho, int d,
                                        double sup_norm, std::string id) {
    ScalarField f;
    f.d = d;
    f.radial = true;
    f.profile = std::move(rho);
    f.sup_norm = sup_norm;
    f.id = std::move(id);
    return f;
}

ScalarField parse_field(const std::string& text, int d) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("bad field string: " + text);
    const std::string head = text.substr(0, colon);
    std::vector<std::string> parts;
    {
        std::istringstream is(text.substr(colon + 1));
        std::string tok;
        while (std::getline(is, tok, ',')) parts.push_back(tok);
    }
    auto num = [&](size_t i) { return std::stod(parts.at(i)); };
    if (head == "polydecay" && parts.size() == 1) return ScalarField::poly_decay(num(0), d);
    if (head == "stretched" && parts.size() == 3)
        return ScalarField::stretched_exp(num(0), num(1), num(2), d);
    if (head == "gaussian" && parts.size() == 1) return ScalarField::gaussian(num(0), d);
    if (head == "motiv" && parts.size() == 2) {
        const double kappa = num(0);
        const int l = static_cast<int>(num(1));
        if (l == 0) {
            ScalarField f = ScalarField::poly_decay(kappa, d);
            std::ostringstream os;
            os << "motiv:" << kappa << ",0";
            f.id = os.str();
            return f;
        }
        if (l == 1 && d == 1) {
            std::ostringstream os;
            os << "motiv:" << kappa << ",1";
            return ScalarField::line(
                [kappa](double x) { return x * std::pow(1.0 + x * x, -kappa); },
                1.0, os.str());
        }
        throw std::invalid_argument("motiv field: only l=0, or l=1 with d=1");
    }
    throw std::invalid_argument("bad field string: " + text);
}

double second_difference(const ScalarField& f, const Point& x, const Point& h) {
    const Point xp = {x[0] + h[0], x[1] + h[1], x[2] + h[2]};
    const Point xm = {x[0] - h[0], x[1] - h[1], x[2] - h[2]};
    return f(xp) - 2.0 * f(x) + f(xm);
}

}  // namespace nlpot
