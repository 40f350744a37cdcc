#pragma once

// Extrapolation of l_p bounds that blow up at an endpoint q into membership in
// the log-refined Orlicz class Phi(x) = x^q / |ln x|^{alpha+1}, and the
// summing-norm profile of the Sobolev embedding.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "orlicz/quadrature.hpp"
#include "orlicz/report.hpp"
#include "orlicz/young.hpp"

namespace orlicz {

// A bound f(p) on (q, q + eps), stored as ln f(q + e^s) against s = ln(p - q)
// so that the approach to q never loses digits to cancellation.
struct BoundProfile {
  double q = 1.0;
  double eps = 1.0;
  std::function<double(double)> log_f_of_log_offset;
  std::optional<double> endpoint_exponent;  // beta with f(p) (p - q)^beta ~ const
  std::string description;

  double operator()(double p) const;
  double log_at(double p) const { return log_f_of_log_offset(std::log(p - q)); }
};

BoundProfile constant_profile(double q, double eps, double c);
// K (p - q)^{-beta}
BoundProfile power_profile(double q, double eps, double K, double beta);
// c^p zeta(p) on (1, 2): the l_p^p norm of (c / k) is bounded by it.
BoundProfile harmonic_profile(double c);

// ln zeta(1 + delta), accurate for delta down to the smallest positive double.
double log_zeta_one_plus(double delta);

// f(p) (p - q)^beta stays within [1/10, 10] of its median on p = q + eps 2^-j.
bool check_endpoint_exponent(const BoundProfile& profile, int steps = 40);

struct BucketDecomposition {
  double scale = 1.0;                     // applied to x (never above 1)
  // n -> #K_n, entries in (1/n, 1/(n-1)], n >= 3; n is an integer-valued double
  std::map<double, std::size_t> counts;
  std::size_t dropped_zeros = 0;
  std::vector<double> normalized;         // nonzero entries after scaling

  std::size_t total() const;
  // sum #K_n n^{-p} and sum #K_n (n-1)^{-p}
  double lower_sum(double p) const;
  double upper_sum(double p) const;
};

// Entries are scaled down (only if needed) so the maximum is at most
// normalize_to - 1e-12, keeping every entry strictly below 1/2.
BucketDecomposition bucket(std::span<const double> x, double normalize_to = 0.5);

// int_q^{q+eps} f(p) (p - q)^alpha dp via u = (p - q)^{alpha + 1}.
quad::PieceResult weighted_integral(const BoundProfile& profile, double alpha);

// int_0^X e^{-s} s^alpha ds by quadrature after s = w^{1/(alpha+1)}.
double lower_gamma_quadrature(double alpha, double X);

struct Lemma8HypothesisError : std::invalid_argument {
  Lemma8HypothesisError(const std::string& what, double p) : std::invalid_argument(what), witness_p(p) {}
  double witness_p;
};

// Checks the quantitative chain
//   gamma(alpha+1, eps ln 2) sum #K_n n^{-q} (ln n)^{-(alpha+1)}
//     <= sum #K_n n^{-q} int_0^eps n^{-t} t^alpha dt
//     <= int f(p) (p - q)^alpha dp
// after bucketing x; the hypothesis ||x||_p^p <= f(p) is verified on a p-grid
// first and a failure throws Lemma8HypothesisError.
VerificationReport lemma8_verify(std::span<const double> x, double alpha,
                                 const BoundProfile& profile, int p_grid = 64);

struct GrowthFit {
  double exponent = 0.0;  // beta in S(N) ~ A (ln N)^beta + B
  std::vector<double> N;
  std::vector<double> partial_sums;
};

// Partial sums of sum_k Phi(x_k), Phi(x) = x^q / |ln x|^gamma, at N = 10^lo..10^hi,
// with the exponent fitted to the per-decade increments.
GrowthFit modular_growth_fit(const std::function<double(std::uint64_t)>& x_of_k, double q,
                             double gamma, int lo = 2, int hi = 7);

struct SobolevProfile {
  int d = 2;
  int k = 1;
  double p = 1.0;
  double p0 = 1.0;
  double s = 2.0;  // 1/s = 1/p - k/d
  BoundProfile profile;
};

// pi_{v,1}(S_{d,k,p}) <= (v - p0)^{1-2/p} on (p0, 2), normalized to K = 1.
SobolevProfile sobolev_profile(int d, int k, double p);

// Integral of (pi_v)^v (v - v1)^alpha over (v1, v1 + eps), evaluated in ln(v - v1).
quad::PieceResult summing_integral(const BoundProfile& profile, double alpha);

struct AdmissibleGamma {
  double p0 = 1.0;
  double gamma_min = 1.0;
  double transition_alpha = 0.0;  // numeric boundary of the convergence classifier
};

AdmissibleGamma admissible_gamma(int d, int k, double p);
quad::Verdict classify_alpha(const SobolevProfile& sp, double alpha);

struct Theorem9Result {
  double K = 0.0;
  quad::Verdict verdict = quad::Verdict::kIndeterminate;
  bool finite = false;
  double v1 = 1.0;
  double gamma = 1.0;  // alpha + 1
  std::string target;  // describe() of LogPower(v1, alpha + 1)
};

// Rejects alpha <= -1.
Theorem9Result theorem9_criterion(const BoundProfile& profile, double alpha);
YoungFunction theorem9_target(const BoundProfile& profile, double alpha);

}  // namespace orlicz
