#include "orlicz/auxlemmas.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>
#include <algorithm>

#include "orlicz/parallel.hpp"
#include "orlicz/simd/kernels.hpp"

namespace orlicz {

double unit_ball_volume(int d) {
  if (d < 1) throw std::invalid_argument("dimension must be at least 1");
  return std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d + 1.0);
}

BallPair::BallPair(int d_, double r_, double alpha_) : d(d_), r(r_), alpha(alpha_) {
  if (d < 1) throw std::invalid_argument("dimension must be at least 1");
  if (!(r > 0.0)) throw std::invalid_argument("radius must be positive");
  if (!(alpha >= 0.0 && alpha < r)) throw std::invalid_argument("need 0 <= alpha < r");
}

double BallPair::lower_bound() const { return unit_ball_volume(d) * std::pow(r, d - 1) * alpha; }

std::string to_string(MeasureMethod m) {
  switch (m) {
    case MeasureMethod::kExact1d:
      return "exact_1d";
    case MeasureMethod::kExact2dLens:
      return "exact_2d_lens";
    case MeasureMethod::kMonteCarlo:
      return "monte_carlo";
  }
  return "unknown";
}

namespace {

Measure monte_carlo(const BallPair& bp, const MeasureOptions& opt) {
  if (opt.samples == 0 || opt.strata == 0) throw std::invalid_argument("empty Monte Carlo budget");
  const double r = bp.r;
  const double r2 = r * r;
  const double D = 2.0 * bp.alpha;
  // Bounding box of the union: [-r, D + r] x [-r, r]^{d-1}.
  const double lo = -r;
  const double width = D + 2.0 * r;
  const double slab = width / static_cast<double>(opt.strata);
  const double cross = std::pow(2.0 * r, bp.d - 1);
  const std::uint64_t per = std::max<std::uint64_t>(2, opt.samples / opt.strata);
  struct Stratum {
    double mean = 0.0;
    double var_of_mean = 0.0;
  };
  const auto strata = parallel_map(opt.strata, [&](std::size_t s) {
    std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                      static_cast<std::uint32_t>(s)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double a = lo + slab * static_cast<double>(s);
    // Points are drawn in fixed order and counted in axis-major chunks, so the
    // count does not depend on which kernel is active.
    const auto& kt = simd::kernels();
    constexpr std::uint64_t kChunk = 4096;
    std::vector<double> coords(kChunk * static_cast<std::size_t>(bp.d));
    std::uint64_t hits = 0;
    for (std::uint64_t done = 0; done < per; done += kChunk) {
      const std::size_t n = static_cast<std::size_t>(std::min(kChunk, per - done));
      for (std::size_t i = 0; i < n; ++i) {
        coords[i] = a + slab * u(rng);
        for (int k = 1; k < bp.d; ++k) coords[static_cast<std::size_t>(k) * n + i] = -r + 2.0 * r * u(rng);
      }
      hits += kt.count_symmetric_difference(n, bp.d, coords.data(), r2, D);
    }
    const double p = static_cast<double>(hits) / static_cast<double>(per);
    const double vol = slab * cross;
    return Stratum{vol * p, vol * vol * p * (1.0 - p) / static_cast<double>(per - 1)};
  });
  Measure m;
  double var = 0.0;
  for (const auto& s : strata) {
    m.value += s.mean;
    var += s.var_of_mean;
  }
  m.standard_error = std::sqrt(var);
  return m;
}

}  // namespace

Measure symmdiff_measure(const BallPair& bp, const MeasureOptions& opt) {
  Measure m;
  switch (opt.method) {
    case MeasureMethod::kExact1d:
      if (bp.d != 1) throw std::invalid_argument("exact_1d needs d = 1");
      m.value = 4.0 * bp.alpha;
      return m;
    case MeasureMethod::kExact2dLens: {
      if (bp.d != 2) throw std::invalid_argument("exact_2d_lens needs d = 2");
      const double r = bp.r;
      const double D = 2.0 * bp.alpha;
      const double lens = 2.0 * r * r * std::acos(D / (2.0 * r)) - 0.5 * D * std::sqrt(4.0 * r * r - D * D);
      m.value = 2.0 * std::numbers::pi * r * r - 2.0 * lens;
      return m;
    }
    case MeasureMethod::kMonteCarlo:
      return monte_carlo(bp, opt);
  }
  throw std::invalid_argument("unknown measure method");
}

VerificationReport lemma2_check(const BallPair& bp, const MeasureOptions& opt) {
  const Measure m = symmdiff_measure(bp, opt);
  const double bound = bp.lower_bound();
  VerificationReport r;
  r.check_id = "lemma2_ball";
  r.lhs = bound;
  r.rhs = m.value;
  r.margin = m.value - bound;
  const bool mc = opt.method == MeasureMethod::kMonteCarlo;
  r.tolerance = mc ? 3.0 * m.standard_error : 1e-14 * std::max(1.0, bound);
  r.tolerance_source = mc ? "three Monte Carlo standard errors" : "closed-form rounding";
  r.pass = r.recompute_pass();
  r.inputs = {{"d", bp.d}, {"r", bp.r}, {"alpha", bp.alpha}, {"method", to_string(opt.method)}};
  if (mc) {
    r.inputs["seed"] = opt.seed;
    r.inputs["samples"] = opt.samples;
    r.inputs["strata"] = opt.strata;
  }
  r.details = {{"measure", m.value},
               {"standard_error", m.standard_error},
               {"bound", bound},
               {"unit_ball_volume", bp.volume_constant()},
               {"margin_kind", "absolute"},
               {"relative_margin", relative_margin(bound, m.value)}};
  return r;
}

std::vector<std::pair<double, double>> lemma7_pairs(const YoungFunction& phi, std::size_t count,
                                                    std::uint64_t seed, double log_span) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double l1 = std::log(phi(1.0));
  std::vector<std::pair<double, double>> pairs;
  for (std::size_t attempts = 0; pairs.size() < count && attempts < 1000 * count + 1000; ++attempts) {
    const double lx = l1 - log_span * u(rng);
    const double ly = l1 + log_span * u(rng);
    if (!(lx < l1 && ly > l1)) continue;
    if (phi.log_inverse(lx) + phi.log_inverse(ly) < 0.0) continue;
    pairs.emplace_back(std::exp(lx), std::exp(ly));
  }
  return pairs;
}

VerificationReport lemma7_transfer(const YoungFunction& phi, double C,
                                   const std::vector<std::pair<double, double>>& pairs) {
  if (!(C >= 1.0)) throw std::invalid_argument("C must be at least 1");
  const double phi1 = phi(1.0);
  const double lC = std::log(C);
  std::size_t hypothesis_held = 0;
  std::size_t violations = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& [x, y] : pairs) {
    if (!(x > 0.0 && x < phi1 && y > phi1)) {
      throw std::invalid_argument("pair violates 0 < x < Phi(1) < y");
    }
    const double lx = std::log(x);
    const double ly = std::log(y);
    const double la = phi.log_inverse(lx);
    const double lb = phi.log_inverse(ly);
    if (la + lb < -1e-15) throw std::invalid_argument("pair violates Phi^-1(x) Phi^-1(y) >= 1");
    const bool hyp = phi.log_inverse(lx + ly) <= lC + la + lb;
    if (!hyp) continue;
    ++hypothesis_held;
    // Phi(C a b) / (Phi(a) Phi(b)) - 1, with Phi(a) Phi(b) = x y
    const double m = std::expm1(std::log(phi(C * std::exp(la + lb))) - lx - ly);
    worst = std::min(worst, m);
    if (m < -1e-9) ++violations;
  }
  VerificationReport r;
  r.check_id = "lemma7_transfer";
  r.lhs = static_cast<double>(violations);
  r.rhs = 0.0;
  r.margin = -static_cast<double>(violations);
  r.tolerance = 0.0;
  r.tolerance_source = "implication counted per pair; conclusion margin tolerance 1e-9";
  r.pass = r.recompute_pass();
  r.inputs = {{"phi", phi.describe()}, {"C", C}, {"pairs", pairs.size()}};
  r.details = {{"hypothesis_held", hypothesis_held},
               {"violations", violations},
               {"worst_conclusion_margin", std::isinf(worst) ? 0.0 : worst}};
  return r;
}

}  // namespace orlicz
