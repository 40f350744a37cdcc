#pragma once

// Quadrature front ends. Finite smooth pieces go to adaptive Gauss-Kronrod,
// endpoint singularities to tanh-sinh, and improper integrals are cut into
// pieces of fixed length in a logarithmic variable so that truncation and
// divergence become observable.

#include <cstddef>
#include <functional>
#include <vector>

namespace orlicz::quad {

double gauss_kronrod(const std::function<double(double)>& f, double a, double b,
                     double rel_tol = 1e-12, unsigned max_depth = 15, double* error = nullptr);

double tanh_sinh(const std::function<double(double)>& f, double a, double b,
                 double rel_tol = 1e-12);

enum class Verdict { kConvergent, kDivergent, kIndeterminate };
const char* verdict_name(Verdict v);

struct PieceOptions {
  double step = 2.302585092994046;  // one decade
  double y_max = 2e4;               // cap on the log variable
  double stop_rel = 1e-8;           // pieces this small relative to the total count as negligible
  int stop_count = 2;               // consecutive negligible pieces required
  double tail_rel = 1e-6;           // geometric tail must be below this fraction of the total
  double convergent_ratio = 1.0;    // piece ratio strictly below this permits stopping
  double divergent_ratio = 0.999;   // piece ratio at or above this counts toward divergence
  int divergent_run = 10;           // consecutive such ratios that declare divergence
  double rel_tol = 1e-12;           // per-piece quadrature tolerance
};

struct PieceResult {
  double value = 0.0;
  double tail_bound = 0.0;
  std::size_t pieces = 0;
  double last_ratio = 0.0;
  bool truncated = false;  // hit y_max before the stopping rule
  Verdict verdict = Verdict::kIndeterminate;
  std::vector<double> piece_values;
};

// Integral over [y0, inf) of exp(log_integrand(y)).
PieceResult integrate_exp_pieces(const std::function<double(double)>& log_integrand, double y0,
                                 const PieceOptions& opt = {});

// Classification options for endpoint-singular integrals: geometric decay of
// refinement pieces with ratio < 0.95 is convergent, growth with ratio > 1/0.95
// divergent, anything else indeterminate.
PieceOptions endpoint_options();

// Integral over (0, X] of h(x), given ln h as a function of ln x. The
// substitution x = X e^{-y} turns the singular endpoint into an infinite range.
PieceResult integrate_endpoint_log(const std::function<double(double)>& log_h_of_log_x,
                                   double X, const PieceOptions& opt = endpoint_options());

}  // namespace orlicz::quad
