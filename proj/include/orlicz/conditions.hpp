#pragma once

// The integral embedding condition
//   s^{d-1}/Phi^{-1}(s^d) int_1^s Psi(t)/t dt
//     + int_s^inf Psi(t) s^{d-1} / (Phi^{-1}(t s^{d-1}) t) dt  <=  C   (s >= 1)
// and its specialization to Psi(t) = Phi^{-1}(t^2)/t, d = 2. Both integrals
// are computed in u = ln t with Phi^{-1} evaluated in log space.

#include <vector>

#include "orlicz/quadrature.hpp"
#include "orlicz/weight.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

struct KolyadaOptions {
  double log_t_max = 2e4;      // cap on ln T for the improper integral
  double stop_rel = 1e-8;      // per-decade negligibility
  double tail_rel = 1e-6;      // required tail bound relative to the total
  double divergence_ratio = 0.999;
  int divergence_run = 10;     // consecutive decades at or above the ratio
  double rel_tol = 1e-12;      // per-piece quadrature tolerance
  double slope_bound = 0.01;   // |d total / d ln s| below this over the top decade => bounded
};

struct ConditionEvaluation {
  double s = 1.0;
  double first_term = 0.0;
  double second_term = 0.0;
  double tail_bound = 0.0;
  double total = 0.0;
  bool truncated = false;  // ln T cap reached before the stopping rule
  bool divergent = false;  // decay test failed
  std::size_t decades = 0;
};

ConditionEvaluation kolyada_eval(const YoungFunction& phi, const Weight& psi, int d, double s,
                                 const KolyadaOptions& opt = {});

struct SupResult {
  double sup_value = 0.0;
  double witness = 1.0;
  bool bounded = false;
  double slope = 0.0;  // least-squares slope of total against ln s over the top decade
  bool any_divergent = false;
  std::vector<ConditionEvaluation> evaluations;
};

SupResult kolyada_sup(const YoungFunction& phi, const Weight& psi, int d,
                      const std::vector<double>& s_grid, const KolyadaOptions& opt = {});

// Same quantity assembled directly from Phi^{-1}: no weight object involved.
SupResult theorem2_condition1(const YoungFunction& phi, const std::vector<double>& s_grid,
                              const KolyadaOptions& opt = {});

// margin = min over the grid of Psi(t)/Phi^{-1}(t^2) - 1/t (relative to 1/t).
ConditionReport theorem8_hypothesis(const YoungFunction& phi, const Weight& psi,
                                    const std::vector<double>& t_grid, double tolerance = 1e-12);

// Informative sufficient check for L_{d/(d-1)} into L_Phi:
// Phi(t) <= a t^{d/(d-1)} + b on the grid.
ConditionReport embedding_hypothesis(const YoungFunction& phi, int d, double a, double b,
                                     const std::vector<double>& t_grid);

// Least-squares slope of y against ln s restricted to s >= s_max / 10.
double top_decade_slope(const std::vector<double>& s, const std::vector<double>& y);

}  // namespace orlicz
