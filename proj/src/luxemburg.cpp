#include "orlicz/luxemburg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "detail/roots.hpp"
#include "orlicz/simd/kernels.hpp"

namespace orlicz {

namespace {

std::vector<double> magnitudes(std::span<const std::complex<double>> x) {
  std::vector<double> re(x.size()), im(x.size()), out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    re[i] = x[i].real();
    im[i] = x[i].imag();
  }
  simd::kernels().complex_abs(x.size(), re.data(), im.data(), out.data());
  return out;
}

std::vector<double> absolute(std::span<const double> x) {
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::fabs(x[i]);
  return out;
}

}  // namespace

double modular(const YoungFunction& phi, std::span<const double> abs_values, double lambda,
               double weight) {
  if (!(lambda > 0.0)) throw std::invalid_argument("modular needs lambda > 0");
  return weight * phi.modular_sum(abs_values, 1.0 / lambda);
}

double luxemburg_abs(const YoungFunction& phi, std::span<const double> a, double weight) {
  const double M = simd::kernels().max_abs(a.size(), a.data());
  if (M == 0.0) return 0.0;
  const double n = static_cast<double>(a.size());
  // At lo the largest term alone reaches 1; at hi every term is at most 1/n.
  double lo = std::log(M) - phi.log_inverse(-std::log(weight));
  double hi = std::log(M) - phi.log_inverse(-std::log(weight * n));
  // g(x) = ln(modular at lambda = e^x), decreasing in x; root at g = 0.
  auto g = [&](double x) {
    const double s = weight * phi.modular_sum(a, std::exp(-x));
    if (s <= 0.0) return -std::numeric_limits<double>::max();
    return std::log(s);
  };
  if (hi <= lo) return std::exp(lo);
  double width = hi - lo;
  for (int i = 0; i < 60 && g(lo) < 0.0; ++i) {
    lo -= width;
    width *= 2.0;
  }
  width = hi - lo;
  for (int i = 0; i < 60 && g(hi) > 0.0; ++i) {
    hi += width;
    width *= 2.0;
  }
  const double x = detail::solve_increasing_abs([&](double v) { return -g(v); }, lo, hi, 1e-14);
  return std::exp(x);
}

double norm_seq(const YoungFunction& phi, std::span<const double> x) {
  if (x.empty()) return 0.0;
  const auto a = absolute(x);
  return luxemburg_abs(phi, a, 1.0);
}

double norm_seq(const YoungFunction& phi, std::span<const std::complex<double>> x) {
  if (x.empty()) return 0.0;
  const auto a = magnitudes(x);
  return luxemburg_abs(phi, a, 1.0);
}

double norm_fun(const YoungFunction& phi, std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("norm_fun needs a nonempty grid");
  const auto a = absolute(samples);
  return luxemburg_abs(phi, a, 1.0 / static_cast<double>(a.size()));
}

double norm_fun(const YoungFunction& phi, std::span<const std::complex<double>> samples) {
  if (samples.empty()) throw std::invalid_argument("norm_fun needs a nonempty grid");
  const auto a = magnitudes(samples);
  return luxemburg_abs(phi, a, 1.0 / static_cast<double>(a.size()));
}

PolyNorm norm_poly(const YoungFunction& phi, const TrigPoly& f, const PolyNormOptions& opt) {
  PolyNorm res;
  if (f.empty()) return res;
  if (opt.parseval_fast_path && phi.kind() == YoungKind::kPower && phi.params()[0] == 2.0) {
    res.value = f.l2_norm();
    return res;
  }
  std::size_t M = quadrature_grid_size(f, opt.oversample);
  auto points = [&](std::size_t m) { return f.dimension() == 1 ? m : m * m; };
  auto at = [&](std::size_t m) {
    const auto mags = evaluate_grid(f, m, opt.method).magnitudes();
    return luxemburg_abs(phi, mags, 1.0 / static_cast<double>(mags.size()));
  };
  res.value = at(M);
  res.grid = M;
  if (!opt.check_convergence) return res;
  res.converged = false;
  while (points(2 * M) <= opt.max_points) {
    M *= 2;
    const double v = at(M);
    res.last_change = std::fabs(v - res.value) / std::max(v, std::numeric_limits<double>::min());
    res.value = v;
    res.grid = M;
    if (res.last_change < opt.rel_tol) {
      res.converged = true;
      break;
    }
  }
  return res;
}

VerificationReport embed_l2_check(const YoungFunction& phi, std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  const double lhs = std::sqrt(s);
  const double rhs = norm_seq(phi, x);
  VerificationReport r =
      make_report("embed_l2", lhs, rhs, 1e-12, "root-finding tolerance of the Luxemburg norm");
  r.inputs = {{"phi", phi.describe()}, {"length", x.size()}};
  return r;
}

}  // namespace orlicz
