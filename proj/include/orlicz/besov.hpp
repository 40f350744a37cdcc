#pragma once

// Integral moduli of continuity, the two Besov-Orlicz norms, the
// best-approximation quantity E_Phi and the empirical norm comparisons.

#include <optional>
#include <vector>

#include "orlicz/luxemburg.hpp"
#include "orlicz/report.hpp"
#include "orlicz/trig.hpp"
#include "orlicz/weight.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

struct ModulusOptions {
  int angles = 64;  // spread over a half circle; the objective is even in h
  int radii = 8;    // equispaced in (0, t], radius t included
  int refine = 5;   // local refinement grid per axis around the argmax
};

// sup_{|h| <= t} ||f(. + h) - f||_{L_Phi}; translations are exact phase factors.
double modulus(const TrigPoly& f, double t, const YoungFunction& phi,
               const ModulusOptions& opt = {}, const PolyNormOptions& norm = {});

struct BesovParams {
  BesovParams(YoungFunction phi_, Weight psi_) : phi(std::move(phi_)), psi(std::move(psi_)) {}
  YoungFunction phi;
  Weight psi;
  int n_max = 20;
  ModulusOptions modulus;
  PolyNormOptions norm;
};

struct ClassicalNorm {
  double value = 0.0;
  double lphi = 0.0;
  std::vector<double> terms;  // Psi(2^n) omega(f, 2^-n), n = 0..n_max
  double last_term = 0.0;
  double tail_estimate = 0.0;  // geometric extrapolation of the dropped terms
};

ClassicalNorm besov_norm_classical(const TrigPoly& f, const BesovParams& params);

struct TildeNorm {
  double value = 0.0;
  double lphi = 0.0;
  std::vector<double> terms;  // Psi(2^n) ||g_n * f||, n = 0..last_level
  int last_level = 0;         // all higher blocks vanish identically
};

TildeNorm besov_norm_tilde(const TrigPoly& f, const BesovParams& params);

// (||f||_p^q + sum 2^{qns} ||g_n * f||_p^q)^{1/q}
double besov_tilde_display(const TrigPoly& f, double p, double q, double s);

struct MultiplierFamily {
  // exp(1 - 1/(1 - u^2)) on |u| < 1, else 0
  static double eta1(double u);
  static double psi_hat(double x, double y);
  // psi_hat(k/m, l/m); m > 0 may be fractional
  static double phi_hat(int k, int l, double m);
  static TrigPoly phi_m(double m);
};

struct BestApprox {
  double upper = 0.0;               // ||f - phi_m * f||_{L_Phi}
  std::optional<double> exact_l2;  // projection error when Phi = t^2
};

BestApprox best_approx_E(const TrigPoly& f, double m, const YoungFunction& phi,
                         const PolyNormOptions& norm = {});

// Truncation-consistent sandwich: left integral to 2^N, dyadic sum n = 0..N,
// right integral to 2^{N+1}.
VerificationReport verify_lemma1(const TrigPoly& f, const BesovParams& params,
                                 int nodes_per_octave = 8);

// Per-level ||g_n * f|| <= 36 ||f - phi_m * f|| with m = 2^{n-3}, n >= 2, and
// the ratio of the two norms.
VerificationReport verify_comparison(const TrigPoly& f, const BesovParams& params);

// Largest n with g_n * f possibly nonzero for a polynomial of this degree.
int last_dyadic_level(int degree);

}  // namespace orlicz
