#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nlpot/nonlocal.hpp"

namespace nlpot {

struct PotentialTable {
    std::vector<double> grid;        // strictly increasing radii
    std::vector<double> values;      // V at each radius
    std::vector<double> est_errors;  // propagated quadrature errors
    BernsteinSpec spec;
    std::string field_id;
};

// geometric grid with n points per decade
std::vector<double> geometric_grid(double r_lo, double r_hi, int per_decade);

// V(x) = -Phi(-Delta) phi(x) / phi(x) on the radial grid
PotentialTable reconstruct_potential(const BernsteinSpec& spec, const ScalarField& phi,
                                     const std::vector<double>& grid,
                                     const QuadratureConfig& cfg = {});

struct AsymptoteReport {
    double fitted_exponent = 0.0;
    double exponent_stderr = 0.0;
    double predicted_exponent = 0.0;
    double window_lo = 0.0, window_hi = 0.0;
    bool verdict = false;
    bool log_correction = false;
    bool sign_change = false;  // fit aborted: V changes sign inside the window
};

// decay exponent of the closed-form family phi_kappa (l = 0) under frac{alpha}
double predicted_decay_exponent(double kappa, int d, double alpha, bool* with_log = nullptr);

AsymptoteReport fit_decay_exponent(const PotentialTable& table, double r_lo, double r_hi,
                                   bool with_log, double predicted);

enum class SignVerdict { Positive, Negative, Mixed, Undetermined };
SignVerdict classify_sign(const PotentialTable& table, double R_tail);

enum class CriterionMode { Plus, Minus };

struct SignCriterion {
    CriterionMode mode = CriterionMode::Plus;
    int d = 1;
    double alpha = 0.0;
    double kappa = 0.0;
    std::optional<double> eta;
    double K_value = 0.0;
    double argopt_t = 0.0;
};

double H_plus(double t, int d, double alpha, double kappa);
double H_minus(double t, int d, double alpha, double kappa, double eta);

SignCriterion criterion_K(CriterionMode mode, int d, double alpha, double kappa,
                          std::optional<double> eta = std::nullopt);

// plus: smallest kappa in ((d-1)/2, d/2) with G_+(kappa) = H_+(1/2) > 0, for given alpha;
// minus: largest alpha in (0,2) with G_-(alpha) = H_-(1/2) < 0, for given (kappa, eta).
// Empty when no sign change exists in the admissible range.
std::optional<double> criterion_threshold_search(CriterionMode mode, int d,
                                                 double alpha_or_kappa,
                                                 std::optional<double> eta = std::nullopt);

struct LpEntry {
    double p = 0.0;
    double tail_integral = 0.0;  // int_{B_M^c} |V|^p over the tabulated range
    bool finite_trend = false;
};

struct LpReport {
    double p_star = 0.0;
    double M = 0.0;
    std::vector<LpEntry> entries;
};

double lp_exponent_threshold(double kappa, double alpha, int d);  // p*
LpReport lp_tail_report(const PotentialTable& table, const std::vector<double>& p_values,
                        double kappa, double alpha, int d, double M);

struct PinningRecord {
    double R = 0.0;          // crossing radius of the two profiles
    double a = 0.0;          // common value at 0
    double I_plus = 0.0, I_minus = 0.0;   // truncated at rho = eps_cut
    double J_plus = 0.0, J_minus = 0.0;
    double I_diff = 0.0;     // I_minus - I_plus, computed cancellation-free
    double delta_V0 = 0.0;   // V_-(0) - V_+(0)
};

PinningRecord pinning_compare(const BernsteinSpec& spec, const ScalarField& phi_plus,
                              const ScalarField& phi_minus,
                              std::optional<double> R = std::nullopt,
                              const QuadratureConfig& cfg = {});

struct LocalShapeReport {
    bool V0_nonpositive = false;
    bool zero_is_local_min = false;
    double r5 = 0.0;  // largest radius up to which V > V(0) holds on the grid
};

LocalShapeReport local_shape_check(const PotentialTable& table);

struct NondecayReport {
    PotentialTable table;
    double growth_radius = 0.0;  // V strictly increasing beyond this radius
    bool monotone_beyond = false;
    double envelope_C = 0.0;     // fitted constant against the lower envelope
    bool exceeds_envelope = false;
};

NondecayReport nondecay_demo(const BernsteinSpec& spec, const ScalarField& phi,
                             const std::vector<double>& grid,
                             const QuadratureConfig& cfg = {});

}  // namespace nlpot
