#include "orlicz/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

#include "orlicz/besov.hpp"
#include "orlicz/grid.hpp"
#include "orlicz/parallel.hpp"

namespace orlicz {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double safe_ratio(double num, double den) {
  if (den == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return num / den;
}

cplx draw(std::mt19937_64& rng, CoefficientLaw law) {
  if (law == CoefficientLaw::kGaussian) {
    std::normal_distribution<double> nd(0.0, std::sqrt(0.5));
    const double re = nd(rng);
    const double im = nd(rng);
    return {re, im};
  }
  std::uniform_real_distribution<double> ud(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, ud(rng));
}

Frame frame_for(int n) { return n >= 3 ? frame(n) : frame_any_level(n); }

void finalize(SamplingCheck& c) {
  c.ratio = safe_ratio(c.lhs, c.rhs);
  c.pass = c.recompute_pass();
}

}  // namespace

nlohmann::json SamplingCheck::to_json() const {
  return {{"check", check},
          {"level", level},
          {"id", id},
          {"lhs", lhs},
          {"rhs", rhs},
          {"ratio", ratio},
          {"bound", bound},
          {"normalized_ratio", normalized_ratio},
          {"supported", supported},
          {"pass", pass}};
}

std::string SamplingCheck::csv_header() {
  return "check,level,id,lhs,rhs,ratio,bound,normalized_ratio,supported,pass";
}

std::string SamplingCheck::csv_row() const {
  return check + "," + std::to_string(level) + "," + std::to_string(id) + "," + fmt17(lhs) + "," +
         fmt17(rhs) + "," + fmt17(ratio) + "," + fmt17(bound) + "," + fmt17(normalized_ratio) +
         "," + (supported ? "1" : "0") + "," + (pass ? "1" : "0");
}

double integral_modular(const YoungFunction& phi, const TrigPoly& g, double rel_tol,
                        std::size_t max_points) {
  if (g.empty()) return 0.0;
  if (phi.kind() == YoungKind::kPower && phi.params()[0] == 2.0) {
    const double n = g.l2_norm();
    return n * n;
  }
  auto points = [&](std::size_t m) { return g.dimension() == 1 ? m : m * m; };
  auto at = [&](std::size_t m) {
    const auto mags = evaluate_grid(g, m).magnitudes();
    return phi.modular_sum(mags, 1.0) / static_cast<double>(mags.size());
  };
  std::size_t M = quadrature_grid_size(g);
  double v = at(M);
  while (points(2 * M) <= max_points) {
    M *= 2;
    const double w = at(M);
    const double change = std::fabs(w - v) / std::max(w, std::numeric_limits<double>::min());
    v = w;
    if (change < rel_tol) break;
  }
  return v;
}

SamplingCheck classical_check_1d(const TrigPoly& g, const YoungFunction& phi, int n) {
  if (g.dimension() != 1) throw std::invalid_argument("classical check needs a 1-D polynomial");
  if (n < 0) n = g.degree();
  if (g.degree() > n) throw std::invalid_argument("degree exceeds n");
  SamplingCheck c;
  c.check = "zygmund_1d";
  c.level = n;
  c.bound = 1.0;
  // 2 pi (k + n)/(2n + 1), k = -n..n, is the uniform grid 2 pi j / (2n + 1).
  const std::size_t M = static_cast<std::size_t>(2 * n + 1);
  const auto mags = evaluate_grid(g, M).magnitudes();
  c.lhs = phi.modular_sum(mags, 1.0 / 3.0) / static_cast<double>(M);
  c.rhs = integral_modular(phi, g);
  c.normalized_ratio = safe_ratio(c.lhs, c.rhs);
  finalize(c);
  return c;
}

Theorem5Preconditions theorem5_preconditions(const YoungFunction& phi, double C) {
  Theorem5Preconditions pre;
  pre.C = C;
  const auto pairs = supermultiplicativity_pairs(1e-9, 1e12, 48);
  pre.supermultiplicativity = check_supermultiplicativity(phi, C, pairs);
  const auto grid = log_grid(1e-12, 1e12, 241);
  pre.inverse_product = check_inverse_product(phi, C, grid);
  return pre;
}

SamplingCheck orlicz_sampling_check(const TrigPoly& f, int n, const YoungFunction& phi, double C,
                                    const Theorem5Preconditions* pre,
                                    const PolyNormOptions& norm) {
  if (f.dimension() != 2) throw std::invalid_argument("frame sampling needs a 2-D polynomial");
  const Frame fr = frame(n);
  for (const auto& [idx, c] : f.coefficients()) {
    if (!fr.contains(idx.first, idx.second)) {
      throw std::invalid_argument("coefficient (" + std::to_string(idx.first) + "," +
                                  std::to_string(idx.second) + ") outside G_" +
                                  std::to_string(n));
    }
  }
  SamplingCheck c;
  c.check = "orlicz_sampling";
  c.level = n;
  c.bound = 24.0 * C * C;
  c.supported = pre ? pre->ok() : true;
  const auto samples = sample_on_grid(f, fr);
  c.lhs = norm_seq(phi, std::span<const cplx>(samples));
  const double lphi = norm_poly(phi, f, norm).value;
  const double scale = phi.inverse(static_cast<double>(fr.omega())) * lphi;
  c.rhs = c.bound * scale;
  c.normalized_ratio = safe_ratio(c.lhs, scale);
  finalize(c);
  return c;
}

SamplingCheck l2_sampling_lower(const TrigPoly& f, int n, double K) {
  if (f.dimension() != 2) throw std::invalid_argument("frame sampling needs a 2-D polynomial");
  const Frame fr = frame_for(n);
  const TrigPoly block = dyadic_block(n, f);
  SamplingCheck c;
  c.check = "l2_frame_lower";
  c.level = n;
  c.bound = K;
  c.lhs = block.l2_norm();
  double s = 0.0;
  if (!block.empty()) {
    for (const cplx& v : sample_on_grid(block, fr)) s += std::norm(v);
  }
  const double sampled = std::sqrt(s / static_cast<double>(fr.omega()));
  c.rhs = K * sampled;
  c.normalized_ratio = safe_ratio(c.lhs, sampled);
  finalize(c);
  return c;
}

CoefficientLaw coefficient_law_from_string(const std::string& s) {
  if (s == "gaussian") return CoefficientLaw::kGaussian;
  if (s == "unimodular") return CoefficientLaw::kUnimodular;
  throw std::invalid_argument("unknown coefficient law: " + s);
}

std::string to_string(CoefficientLaw law) {
  return law == CoefficientLaw::kGaussian ? "gaussian" : "unimodular";
}

TrigPoly random_poly_on_frame(int n, std::uint64_t seed, CoefficientLaw law, double fraction) {
  if (n < 3) throw std::invalid_argument("random_poly_on_frame needs n >= 3");
  if (!(fraction > 0.0 && fraction <= 1.0)) throw std::invalid_argument("fraction in (0, 1]");
  const Frame fr = frame(n);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> keep(0.0, 1.0);
  TrigPoly p(2);
  for (const auto& [k, l] : fr.points) {
    const bool take = fraction >= 1.0 || keep(rng) < fraction;
    const cplx c = draw(rng, law);
    if (take) p.set(k, l, c);
  }
  if (p.empty()) p.set(fr.points.front().first, fr.points.front().second, draw(rng, law));
  return p;
}

TrigPoly random_poly_1d(int degree, std::uint64_t seed, CoefficientLaw law) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  std::mt19937_64 rng(seed);
  TrigPoly p(1);
  for (int k = -degree; k <= degree; ++k) p.set(k, 0, draw(rng, law));
  return p;
}

TrigPoly random_poly_2d(int degree, std::uint64_t seed, CoefficientLaw law) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  std::mt19937_64 rng(seed);
  TrigPoly p(2);
  for (int k = -degree; k <= degree; ++k) {
    for (int l = -degree; l <= degree; ++l) p.set(k, l, draw(rng, law));
  }
  return p;
}

std::uint64_t batch_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

TrigPoly extremal_candidate(int n) {
  const Frame fr = frame(n);
  TrigPoly p(2);
  p.set(fr.half - 1, 0, 1.0);
  return p;
}

double extremal_normalized_ratio(const YoungFunction& phi, int n) {
  const double w = static_cast<double>(frame(n).omega());
  return phi.inverse(1.0) / (phi.inverse(1.0 / w) * phi.inverse(w));
}

nlohmann::json SamplingBatch::summary() const {
  nlohmann::json j;
  j["checks"] = checks.size();
  j["violations"] = violations;
  j["max_normalized_ratio"] = max_normalized_ratio;
  j["bound"] = checks.empty() ? 0.0 : checks.front().bound;
  j["preconditions"] = {{"C", preconditions.C},
                        {"supermultiplicativity", to_json(preconditions.supermultiplicativity)},
                        {"inverse_product", to_json(preconditions.inverse_product)},
                        {"ok", preconditions.ok()}};
  return j;
}

SamplingBatch theorem5_batch(int n, std::size_t trials, std::uint64_t seed,
                             const YoungFunction& phi, double C, CoefficientLaw law) {
  SamplingBatch b;
  b.preconditions = theorem5_preconditions(phi, C);
  b.checks = parallel_map(trials + 1, [&](std::size_t i) {
    if (i == 0) {
      SamplingCheck c = orlicz_sampling_check(extremal_candidate(n), n, phi, C, &b.preconditions);
      c.check = "orlicz_sampling_extremal";
      return c;
    }
    const std::uint64_t s = batch_seed(seed, i - 1);
    SamplingCheck c =
        orlicz_sampling_check(random_poly_on_frame(n, s, law), n, phi, C, &b.preconditions);
    c.id = s;
    return c;
  });
  for (const auto& c : b.checks) {
    b.max_normalized_ratio = std::max(b.max_normalized_ratio, c.normalized_ratio);
    if (!c.pass) ++b.violations;
  }
  return b;
}

VerificationReport theorem8_chain(const TrigPoly& f, const YoungFunction& phi, const Weight& psi,
                                  double C, const PolyNormOptions& norm) {
  if (f.dimension() != 2) throw std::invalid_argument("theorem8_chain needs a 2-D polynomial");
  const int last = last_dyadic_level(f.degree());
  struct Level {
    double l2 = 0.0, sampled_l2 = 0.0, lphi = 0.0, sampled_lphi = 0.0, omega = 0.0;
  };
  const auto levels = parallel_map(static_cast<std::size_t>(last + 1), [&](std::size_t i) {
    const int n = static_cast<int>(i);
    Level lv;
    const Frame fr = frame_for(n);
    lv.omega = static_cast<double>(fr.omega());
    const TrigPoly block = dyadic_block(n, f);
    if (block.empty()) return lv;
    lv.l2 = block.l2_norm();
    const auto samples = sample_on_grid(block, fr);
    double s = 0.0;
    for (const cplx& v : samples) s += std::norm(v);
    lv.sampled_l2 = std::sqrt(s);
    lv.sampled_lphi = norm_seq(phi, std::span<const cplx>(samples));
    lv.lphi = norm_poly(phi, block, norm).value;
    return lv;
  });
  double lhs2 = 0.0, step1 = 0.0, step5 = 0.0, rhs_sum = 0.0;
  nlohmann::json per_level = nlohmann::json::array();
  for (std::size_t n = 0; n < levels.size(); ++n) {
    const Level& lv = levels[n];
    const double w = psi(std::sqrt(lv.omega));
    lhs2 += lv.l2 * lv.l2;
    step1 += lv.sampled_l2 * lv.sampled_l2 / lv.omega;
    step5 += w / phi.inverse(lv.omega) * lv.sampled_lphi;
    rhs_sum += w * lv.lphi;
    per_level.push_back({{"n", n},
                         {"omega", lv.omega},
                         {"l2", lv.l2},
                         {"sampled_l2", lv.sampled_l2},
                         {"lphi", lv.lphi},
                         {"sampled_lphi", lv.sampled_lphi},
                         {"psi_sqrt_omega", w}});
  }
  const double bound = 24.0 * C * C;
  VerificationReport r = make_report("theorem8_chain", std::sqrt(lhs2), bound * rhs_sum, 1e-9,
                                     "Luxemburg root and quadrature accuracy");
  r.inputs = {{"phi", phi.describe()},
              {"psi", psi.describe()},
              {"C", C},
              {"degree", f.degree()},
              {"support", f.support_size()}};
  r.details = {{"sampled_l2_sum", std::sqrt(step1)},
               {"sampled_lphi_sum", step5},
               {"unweighted_rhs_sum", rhs_sum},
               {"bound", bound},
               {"levels", per_level}};
  return r;
}

}  // namespace orlicz
