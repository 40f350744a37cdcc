#pragma once

// Marcinkiewicz-type sampling inequalities checked on concrete polynomials:
// the classical one-dimensional Zygmund inequality, its Orlicz version on the
// frames G_n with constant 24 C^2, the l_2 lower bound on frames, and the
// chain of estimates behind the summing embedding.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orlicz/luxemburg.hpp"
#include "orlicz/report.hpp"
#include "orlicz/trig.hpp"
#include "orlicz/weight.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

struct SamplingCheck {
  std::string check;
  int level = 0;
  std::uint64_t id = 0;  // seed of the polynomial (or a fixed tag for extremal candidates)
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  // lhs / rhs
  double bound = 0.0;  // constant in front of the right-hand side
  // lhs divided by the right-hand side without its constant; comparable to bound.
  double normalized_ratio = 0.0;
  bool supported = true;  // hypotheses of the underlying theorem verified
  bool pass = false;

  bool recompute_pass() const { return lhs <= rhs * (1.0 + 1e-9); }
  nlohmann::json to_json() const;
  static std::string csv_header();
  std::string csv_row() const;
};

// (1/(2n+1)) sum Phi(|g(2 pi j/(2n+1))| / 3) <= (1/2 pi) int Phi(|g|), n >= deg g.
// n < 0 selects n = deg g.
SamplingCheck classical_check_1d(const TrigPoly& g, const YoungFunction& phi, int n = -1);

// (1/2 pi) int Phi(|g|) (or its 2-D analogue) on an oversampled grid doubled
// until the relative change drops below rel_tol.
double integral_modular(const YoungFunction& phi, const TrigPoly& g, double rel_tol = 1e-9,
                        std::size_t max_points = 1u << 20);

struct Theorem5Preconditions {
  double C = 1.0;
  ConditionReport supermultiplicativity;
  ConditionReport inverse_product;
  bool ok() const { return supermultiplicativity.pass && inverse_product.pass; }
};

Theorem5Preconditions theorem5_preconditions(const YoungFunction& phi, double C);

// ||(f)||_{l_Phi} over G_n <= 24 C^2 Phi^{-1}(omega_n) ||f||_{L_Phi}, supp f^ in G_n.
// Throws std::invalid_argument on a support violation.
SamplingCheck orlicz_sampling_check(const TrigPoly& f, int n, const YoungFunction& phi, double C,
                                    const Theorem5Preconditions* pre = nullptr,
                                    const PolyNormOptions& norm = {});

// Empirical constant K with ||g_n*f||_{L_2} = K omega_n^{-1/2} ||(g_n*f)||_{l_2}.
constexpr double kLemma3Constant = 2.0;
SamplingCheck l2_sampling_lower(const TrigPoly& f, int n, double K = kLemma3Constant);

enum class CoefficientLaw { kGaussian, kUnimodular };
CoefficientLaw coefficient_law_from_string(const std::string& s);
std::string to_string(CoefficientLaw law);

// Coefficients on every point of G_n (fraction < 1 keeps a seeded random subset).
TrigPoly random_poly_on_frame(int n, std::uint64_t seed, CoefficientLaw law,
                              double fraction = 1.0);
TrigPoly random_poly_1d(int degree, std::uint64_t seed, CoefficientLaw law);
// Coefficients on [-degree, degree]^2.
TrigPoly random_poly_2d(int degree, std::uint64_t seed, CoefficientLaw law);

// Seed of the i-th member of a batch; a fixed bijective mix of (seed, i).
std::uint64_t batch_seed(std::uint64_t seed, std::uint64_t index);

// A single frame harmonic: |f| is constant, so the ratio is known in closed form.
TrigPoly extremal_candidate(int n);
// Phi^{-1}(1) / (Phi^{-1}(1/omega_n) Phi^{-1}(omega_n))
double extremal_normalized_ratio(const YoungFunction& phi, int n);

struct SamplingBatch {
  std::vector<SamplingCheck> checks;  // extremal candidate first, then trials in seed order
  Theorem5Preconditions preconditions;
  double max_normalized_ratio = 0.0;
  std::size_t violations = 0;
  nlohmann::json summary() const;
};

SamplingBatch theorem5_batch(int n, std::size_t trials, std::uint64_t seed,
                             const YoungFunction& phi, double C,
                             CoefficientLaw law = CoefficientLaw::kGaussian);

// (sum ||g_n*f||_{L_2}^2)^{1/2} <= 24 C^2 sum Psi(sqrt omega_n) ||g_n*f||_{L_Phi},
// with the intermediate quantities of the estimate chain in the details.
VerificationReport theorem8_chain(const TrigPoly& f, const YoungFunction& phi, const Weight& psi,
                                  double C, const PolyNormOptions& norm = {});

}  // namespace orlicz
