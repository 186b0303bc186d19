#pragma once

#include "nlpot/fields.hpp"
#include "nlpot/kernels.hpp"

namespace nlpot {

struct QuadratureConfig {
    double split_radius_R = 1.0;
    double rel_tol = 1e-8;
    double tail_factor = 50.0;
    int angular_nodes = 64;
};

struct ApplyResult {
    double value = 0.0;
    double est_error = 0.0;
};

// Phi(-Delta) f(x) = -(1/2) int D_h f(x) j(|h|) dh
ApplyResult apply_nonlocal_full(const BernsteinSpec& spec, const ScalarField& f,
                                const Point& x, const QuadratureConfig& cfg = {});
double apply_nonlocal(const BernsteinSpec& spec, const ScalarField& f,
                      const Point& x, const QuadratureConfig& cfg = {});

// same against a prebuilt kernel (avoids re-parsing the Levy data per call)
ApplyResult apply_with_kernel(const JumpKernel& k, const ScalarField& f,
                              const Point& x, const QuadratureConfig& cfg);

// G_{m,alpha} f(x) = -(1/2) int D_h f(x) sigma_{m,alpha}(|h|) dh,
// so that Phi_m(-Delta) = Phi_0(-Delta) - G_{m,alpha}
ApplyResult apply_g_operator_full(double m, double alpha, const ScalarField& f,
                                  const Point& x, const QuadratureConfig& cfg = {});
double apply_g_operator(double m, double alpha, const ScalarField& f,
                        const Point& x, const QuadratureConfig& cfg = {});

// empirical Zygmund constant: max |D_h f(x)| / |h|^2 over log-spaced |h|
double estimate_zygmund_L(const ScalarField& f, const Point& x, double R,
                          int n_samples);

// number of worker threads for grid sweeps (>=1); settable by the CLI
int worker_threads();
void set_worker_threads(int n);

}  // namespace nlpot
