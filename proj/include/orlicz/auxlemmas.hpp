#pragma once

// The ball lemma |B(0,r) symmetric-difference B(x,r)| >= V_d r^{d-1} alpha for
// |x| = 2 alpha, and the transfer from the inverse-function inequality to
// restricted supermultiplicativity.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orlicz/report.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

// pi^{d/2} / Gamma(d/2 + 1)
double unit_ball_volume(int d);

struct BallPair {
  int d = 2;
  double r = 1.0;
  double alpha = 0.0;  // centers at distance 2 alpha, 0 <= alpha < r

  BallPair() = default;
  BallPair(int d_, double r_, double alpha_);
  double volume_constant() const { return unit_ball_volume(d); }
  double lower_bound() const;  // V_d r^{d-1} alpha
};

enum class MeasureMethod { kExact1d, kExact2dLens, kMonteCarlo };
std::string to_string(MeasureMethod m);

struct MeasureOptions {
  MeasureMethod method = MeasureMethod::kExact2dLens;
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000000;
  std::size_t strata = 16;  // slabs along the offset axis, one sub-seed each
};

struct Measure {
  double value = 0.0;
  double standard_error = 0.0;
};

Measure symmdiff_measure(const BallPair& bp, const MeasureOptions& opt = {});

// Margin value - bound (absolute); Monte Carlo passes if it exceeds -3 SE.
VerificationReport lemma2_check(const BallPair& bp, const MeasureOptions& opt = {});

// Seeded pairs (x, y) with 0 < x < Phi(1) < y and Phi^{-1}(x) Phi^{-1}(y) >= 1.
std::vector<std::pair<double, double>> lemma7_pairs(const YoungFunction& phi, std::size_t count,
                                                    std::uint64_t seed, double log_span = 20.0);

// For each pair: whenever Phi^{-1}(xy) <= C Phi^{-1}(x) Phi^{-1}(y), check
// Phi(a) Phi(b) <= Phi(C a b) for a = Phi^{-1}(x), b = Phi^{-1}(y). Pairs
// outside the admissible set throw std::invalid_argument.
VerificationReport lemma7_transfer(const YoungFunction& phi, double C,
                                   const std::vector<std::pair<double, double>>& pairs);

}  // namespace orlicz
