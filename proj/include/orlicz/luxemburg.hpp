#pragma once

// Luxemburg norms: inf{lambda > 0 : weight * sum Phi(|x_i| / lambda) <= 1}.
// Sequences use weight 1; sampled functions use the normalized measure, i.e.
// weight 1 / (number of samples).

#include <complex>
#include <cstddef>
#include <span>

#include "orlicz/grid.hpp"
#include "orlicz/report.hpp"
#include "orlicz/trig.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

// weight * sum Phi(a_i / lambda)
double modular(const YoungFunction& phi, std::span<const double> abs_values, double lambda,
               double weight = 1.0);

// Root of the unit-modular equation for nonnegative data.
double luxemburg_abs(const YoungFunction& phi, std::span<const double> abs_values, double weight);

double norm_seq(const YoungFunction& phi, std::span<const double> x);
double norm_seq(const YoungFunction& phi, std::span<const std::complex<double>> x);

// Samples on a uniform grid of T or T^2 (normalized measure).
double norm_fun(const YoungFunction& phi, std::span<const double> samples);
double norm_fun(const YoungFunction& phi, std::span<const std::complex<double>> samples);

struct PolyNormOptions {
  int oversample = 8;
  double rel_tol = 1e-9;          // doubling stops when the norm moves less than this
  std::size_t max_points = 1u << 20;
  bool check_convergence = true;
  bool parseval_fast_path = true;  // exact for Phi = t^2
  EvalMethod method = EvalMethod::kAuto;
};

struct PolyNorm {
  double value = 0.0;
  std::size_t grid = 0;      // points per axis of the final grid
  bool converged = true;
  double last_change = 0.0;  // relative change of the last doubling
};

// ||f||_{L_Phi} for a trigonometric polynomial.
PolyNorm norm_poly(const YoungFunction& phi, const TrigPoly& f, const PolyNormOptions& opt = {});

// ||x||_2 <= ||x||_{l_Phi}
VerificationReport embed_l2_check(const YoungFunction& phi, std::span<const double> x);

}  // namespace orlicz
