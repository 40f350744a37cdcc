#include "orlicz/young.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "detail/roots.hpp"
#include "orlicz/simd/kernels.hpp"

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// g(y) = y / ln y and its first two derivatives.
double g_fun(double y) { return y / std::log(y); }
double g_d1(double y) {
  const double l = std::log(y);
  return 1.0 / l - 1.0 / (l * l);
}
double g_d2(double y) {
  const double l = std::log(y);
  return -1.0 / (y * l * l) + 2.0 / (y * l * l * l);
}

double safe_log(double x) { return x > 0.0 ? std::log(x) : -kInf; }

// ln(e^w / s + c), accurate when e^w over- or underflows.
double log_affine_inverse(double w, double slope, double offset) {
  if (w < 700.0) return std::log(std::exp(w) / slope + offset);
  return w - std::log(slope) + std::log1p(offset * slope * std::exp(-w));
}

}  // namespace

std::string_view kind_name(YoungKind kind) {
  switch (kind) {
    case YoungKind::kPower:
      return "power";
    case YoungKind::kLogPower:
      return "logpower";
    case YoungKind::kSection7:
      return "section7";
    case YoungKind::kTabulated:
      return "tabulated";
  }
  return "unknown";
}

YoungFunction YoungFunction::power(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw std::invalid_argument("power Young function needs p > 1");
  }
  YoungFunction y;
  y.kind_ = YoungKind::kPower;
  y.params_ = {p};
  return y;
}

YoungFunction YoungFunction::logpower(double p0, double gamma) {
  if (!(p0 >= 1.0) || !std::isfinite(p0)) throw std::invalid_argument("logpower needs p0 >= 1");
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw std::invalid_argument("logpower needs gamma > 0");
  }
  YoungFunction y;
  y.kind_ = YoungKind::kLogPower;
  y.params_ = {p0, gamma};
  const double t = kLogPowerSwitch;
  const double L = -std::log(t);
  y.switch_value_ = std::pow(t, p0) / std::pow(L, gamma);
  y.switch_slope_ = std::pow(t, p0 - 1.0) / std::pow(L, gamma) * (p0 + gamma / L);
  return y;
}

YoungFunction YoungFunction::section7(double alpha) {
  const double e2 = std::exp(2.0);
  if (!(alpha > 0.0) || !(alpha < 1.0 / e2)) {
    throw std::invalid_argument("section7 needs 0 < alpha < e^-2");
  }
  YoungFunction y;
  y.kind_ = YoungKind::kSection7;
  y.params_ = {alpha};
  Section7Constants c{};
  c.alpha = alpha;
  c.log_r = 2.0 * e2;
  c.r = std::exp(c.log_r);
  const double A = e2 / 2.0;
  const double up = std::exp(alpha * A);
  const double down = std::exp(-alpha * A);
  c.p = (c.r * down - up / c.r) / (c.r - 1.0 / c.r);
  c.q = c.r * down - c.p * c.r;
  y.s7_ = c;
  y.s7_inv_lo_ = y.section7_inverse(1.0 / c.r);
  y.s7_inv_hi_ = y.section7_inverse(c.r);
  return y;
}

YoungFunction YoungFunction::tabulated(std::vector<std::pair<double, double>> breakpoints) {
  if (breakpoints.empty()) throw std::invalid_argument("tabulated needs at least one breakpoint");
  std::vector<std::pair<double, double>> pts;
  pts.reserve(breakpoints.size() + 1);
  pts.emplace_back(0.0, 0.0);
  for (const auto& bp : breakpoints) {
    if (bp.first == 0.0 && bp.second == 0.0 && pts.size() == 1) continue;
    pts.push_back(bp);
  }
  double prev_slope = 0.0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const double dt = pts[i].first - pts[i - 1].first;
    const double du = pts[i].second - pts[i - 1].second;
    if (!(dt > 0.0) || !(du > 0.0)) {
      throw std::invalid_argument("tabulated breakpoints must be strictly increasing");
    }
    const double slope = du / dt;
    if (slope < prev_slope * (1.0 - 1e-12)) {
      throw std::invalid_argument("tabulated breakpoints are not convex");
    }
    prev_slope = slope;
  }
  if (pts.size() < 2) throw std::invalid_argument("tabulated needs a positive breakpoint");
  YoungFunction y;
  y.kind_ = YoungKind::kTabulated;
  y.table_ = std::move(pts);
  return y;
}

const Section7Constants& YoungFunction::section7_constants() const {
  if (kind_ != YoungKind::kSection7) throw std::logic_error("not a section7 Young function");
  return s7_;
}

std::string YoungFunction::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case YoungKind::kPower:
      os << "power(p=" << params_[0] << ")";
      break;
    case YoungKind::kLogPower:
      os << "logpower(p0=" << params_[0] << ", gamma=" << params_[1] << ")";
      break;
    case YoungKind::kSection7:
      os << "section7(alpha=" << params_[0] << ")";
      break;
    case YoungKind::kTabulated:
      os << "tabulated(" << table_.size() - 1 << " breakpoints)";
      break;
  }
  return os.str();
}

// ---- LogPower --------------------------------------------------------------

double YoungFunction::logpower_core(double t) const {
  const double p0 = params_[0];
  const double gamma = params_[1];
  const double lt = std::log(t);
  return std::exp(p0 * lt - gamma * std::log(-lt));
}

// Solves p0 x - gamma ln(-x) = ln u for x = ln t <= ln(1/2).
double YoungFunction::logpower_inverse_core(double log_u) const {
  const double p0 = params_[0];
  const double gamma = params_[1];
  auto h = [&](double x) { return p0 * x - gamma * std::log(-x) - log_u; };
  const double hi = std::log(kLogPowerSwitch);
  double lo = std::min(log_u / p0, -1.0) - 1.0;
  while (h(lo) > 0.0) lo *= 2.0;
  return detail::solve_increasing(h, lo, hi);
}

// ---- Section7 --------------------------------------------------------------

double YoungFunction::section7_inverse(double u) const {
  if (u <= 0.0) return 0.0;
  if (u >= 1.0 / s7_.r && u < s7_.r) return s7_.p * u + s7_.q;
  return std::exp(log_inverse(std::log(u)));
}

double YoungFunction::section7_value(double t) const {
  if (t <= 0.0) return 0.0;
  if (t >= s7_inv_lo_ && t < s7_inv_hi_) {
    return std::max((t - s7_.q) / s7_.p, 0.0);
  }
  const double v = std::log(t);
  const double shrink = 1.0 - s7_.alpha / 4.0;
  double w;
  if (t < s7_inv_lo_) {
    double lo = v / shrink;
    double hi = std::min(v, -s7_.log_r);
    if (lo > hi) lo = hi;
    w = detail::solve_increasing([&](double x) { return log_inverse(x) - v; }, lo, hi);
  } else {
    double lo = std::max(v, s7_.log_r);
    double hi = v / shrink;
    if (hi < lo) hi = lo;
    w = detail::solve_increasing([&](double x) { return log_inverse(x) - v; }, lo, hi);
  }
  return std::exp(w);
}

// ---- Tabulated -------------------------------------------------------------

double YoungFunction::tabulated_value(double t) const {
  if (t <= 0.0) return 0.0;
  const auto it = std::upper_bound(table_.begin(), table_.end(), t,
                                   [](double v, const auto& bp) { return v < bp.first; });
  std::size_t i = static_cast<std::size_t>(it - table_.begin());
  if (i >= table_.size()) i = table_.size() - 1;
  const auto& a = table_[i - 1];
  const auto& b = table_[i];
  const double slope = (b.second - a.second) / (b.first - a.first);
  return a.second + slope * (t - a.first);
}

double YoungFunction::tabulated_inverse(double u) const {
  if (u <= 0.0) return 0.0;
  const auto it = std::upper_bound(table_.begin(), table_.end(), u,
                                   [](double v, const auto& bp) { return v < bp.second; });
  std::size_t i = static_cast<std::size_t>(it - table_.begin());
  if (i >= table_.size()) i = table_.size() - 1;
  const auto& a = table_[i - 1];
  const auto& b = table_[i];
  const double slope = (b.second - a.second) / (b.first - a.first);
  return a.first + (u - a.second) / slope;
}

// ---- Generic ---------------------------------------------------------------

double YoungFunction::value(double t) const {
  if (!(t > 0.0)) return 0.0;
  switch (kind_) {
    case YoungKind::kPower:
      return std::pow(t, params_[0]);
    case YoungKind::kLogPower:
      if (t <= kLogPowerSwitch) return logpower_core(t);
      return switch_value_ + switch_slope_ * (t - kLogPowerSwitch);
    case YoungKind::kSection7:
      return section7_value(t);
    case YoungKind::kTabulated:
      return tabulated_value(t);
  }
  return 0.0;
}

double YoungFunction::inverse(double u) const {
  if (!(u > 0.0)) return 0.0;
  switch (kind_) {
    case YoungKind::kPower:
      return std::pow(u, 1.0 / params_[0]);
    case YoungKind::kLogPower:
      if (u <= switch_value_) return std::exp(logpower_inverse_core(std::log(u)));
      return kLogPowerSwitch + (u - switch_value_) / switch_slope_;
    case YoungKind::kSection7:
      return section7_inverse(u);
    case YoungKind::kTabulated:
      return tabulated_inverse(u);
  }
  return 0.0;
}

double YoungFunction::log_inverse(double w) const {
  switch (kind_) {
    case YoungKind::kPower:
      return w / params_[0];
    case YoungKind::kLogPower:
      if (w <= std::log(switch_value_)) return logpower_inverse_core(w);
      return log_affine_inverse(w, switch_slope_, kLogPowerSwitch - switch_value_ / switch_slope_);
    case YoungKind::kSection7: {
      const double a = s7_.alpha;
      if (w < -s7_.log_r) {
        const double y = -w / 2.0;
        return w + a * g_fun(y);
      }
      if (w < s7_.log_r) return std::log(s7_.p * std::exp(w) + s7_.q);
      const double z = w / 2.0;
      return w - a * g_fun(z);
    }
    case YoungKind::kTabulated: {
      if (w < -700.0) {
        const double slope = table_[1].second / table_[1].first;
        return w - std::log(slope);
      }
      if (w > 700.0) {
        const auto& a = table_[table_.size() - 2];
        const auto& b = table_.back();
        const double slope = (b.second - a.second) / (b.first - a.first);
        return log_affine_inverse(w, slope, b.first - b.second / slope);
      }
      return safe_log(tabulated_inverse(std::exp(w)));
    }
  }
  return 0.0;
}

double YoungFunction::modular_sum(std::span<const double> a, double scale) const {
  double sum = 0.0;
  switch (kind_) {
    case YoungKind::kPower: {
      const double p = params_[0];
      if (p == 2.0) return scale * scale * simd::kernels().sum_squares(a.size(), a.data());
      for (double v : a) sum += v > 0.0 ? std::pow(v * scale, p) : 0.0;
      return sum;
    }
    case YoungKind::kSection7:
      for (double v : a) sum += section7_value(v * scale);
      return sum;
    default:
      for (double v : a) sum += value(v * scale);
      return sum;
  }
}

// ---- Condition checks ------------------------------------------------------

std::vector<double> log_grid(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0) || !(hi >= lo) || n == 0) throw std::invalid_argument("log_grid needs 0 < lo <= hi, n > 0");
  std::vector<double> g(n);
  if (n == 1) {
    g[0] = lo;
    return g;
  }
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) {
    g[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
  }
  g.front() = lo;
  g.back() = hi;
  return g;
}

namespace {

ConditionReport start_report(std::string id, std::span<const double> grid, double tol) {
  ConditionReport rep;
  rep.condition = std::move(id);
  rep.tolerance = tol;
  rep.grid_size = grid.size();
  if (!grid.empty()) {
    rep.grid_lo = *std::min_element(grid.begin(), grid.end());
    rep.grid_hi = *std::max_element(grid.begin(), grid.end());
  }
  rep.worst_margin = kInf;
  return rep;
}

void finish(ConditionReport& rep) {
  if (rep.worst_margin == kInf) rep.worst_margin = 0.0;
  rep.pass = rep.worst_margin >= -rep.tolerance;
}

double rel(double diff, double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return scale > 0.0 ? diff / scale : 0.0;
}

// F''(u) u^2 / F(u) for F = (Phi^{-1})^2 on a curved branch.
double section7_inverse_sq_curvature(const Section7Constants& c, double u) {
  const double a = c.alpha;
  const double w = std::log(u);
  if (w < -c.log_r) {
    const double y = -w / 2.0;
    const double g1 = g_d1(y);
    return 2.0 - 3.0 * a * g1 + a * a * g1 * g1 + a * g_d2(y) / 2.0;
  }
  if (w < c.log_r) {
    const double lin = c.p * u + c.q;
    return 2.0 * c.p * c.p * u * u / (lin * lin);
  }
  const double z = w / 2.0;
  const double g1 = g_d1(z);
  return 2.0 - 3.0 * a * g1 + a * a * g1 * g1 - a * g_d2(z) / 2.0;
}

}  // namespace

ConditionReport check_sqrt_concavity(const YoungFunction& phi, std::span<const double> grid,
                                     double tolerance) {
  ConditionReport rep = start_report("sqrt_concavity", grid, tolerance);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double a = grid[i];
    const double b = grid[i + 1];
    const double lhs = phi(std::sqrt(0.5 * (a + b)));
    const double rhs = 0.5 * (phi(std::sqrt(a)) + phi(std::sqrt(b)));
    const double m = rel(lhs - rhs, lhs, rhs);
    if (m < rep.worst_margin) {
      rep.worst_margin = m;
      rep.witness = {a};
    }
  }
  finish(rep);
  return rep;
}

ConditionReport check_inverse_sq_convexity(const YoungFunction& phi,
                                           std::span<const double> grid, double tolerance) {
  ConditionReport rep = start_report("inverse_sq_convexity", grid, tolerance);
  if (phi.kind() == YoungKind::kSection7) {
    const auto& c = phi.section7_constants();
    for (double u : grid) {
      const double m = section7_inverse_sq_curvature(c, u);
      if (m < rep.worst_margin) {
        rep.worst_margin = m;
        rep.witness = {u};
      }
    }
    rep.note = "closed-form second derivative, normalized by F/u^2";
  } else {
    double prev_slope = 0.0;
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
      const double f0 = std::pow(phi.inverse(grid[i]), 2);
      const double f1 = std::pow(phi.inverse(grid[i + 1]), 2);
      const double slope = (f1 - f0) / (grid[i + 1] - grid[i]);
      if (i > 0) {
        const double m = rel(slope - prev_slope, slope, prev_slope);
        if (m < rep.worst_margin) {
          rep.worst_margin = m;
          rep.witness = {grid[i]};
        }
      }
      prev_slope = slope;
    }
    rep.note = "second divided differences";
  }
  finish(rep);
  return rep;
}

ConditionReport section7_junction_kinks(const YoungFunction& phi) {
  const auto& c = phi.section7_constants();
  const double junctions[2] = {1.0 / c.r, c.r};
  ConditionReport rep = start_report("section7_junction_kinks", junctions, 0.0);
  for (int j = 0; j < 2; ++j) {
    const double u = junctions[j];
    const double F = std::pow(phi.inverse(u), 2);
    double left;
    double right;
    if (j == 0) {
      const double y = c.log_r / 2.0;  // inner branch variable at u = 1/r
      left = F * (2.0 - c.alpha * g_d1(y)) / u;
      right = 2.0 * c.p * (c.p * u + c.q);
    } else {
      const double z = c.log_r / 2.0;
      left = 2.0 * c.p * (c.p * u + c.q);
      right = F * (2.0 - c.alpha * g_d1(z)) / u;
    }
    const double m = rel(right - left, right, left);
    if (m < rep.worst_margin) {
      rep.worst_margin = m;
      rep.witness = {u, left, right};
    }
  }
  rep.note = "witness = (junction, left slope, right slope) of (Phi^-1)^2";
  finish(rep);
  return rep;
}

std::vector<std::pair<double, double>> supermultiplicativity_pairs(double a_min, double ab_max,
                                                                   std::size_t per_axis) {
  if (!(a_min > 0.0 && a_min < 1.0) || !(ab_max >= 1.0) || per_axis < 1) {
    throw std::invalid_argument("supermultiplicativity_pairs: bad range");
  }
  auto as = log_grid(a_min, 1.0, per_axis + 1);
  as.pop_back();
  const auto ms = log_grid(1.0, ab_max, per_axis);
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(as.size() * ms.size());
  for (double a : as) {
    for (double m : ms) pairs.emplace_back(a, m / a);
  }
  return pairs;
}

ConditionReport check_supermultiplicativity(const YoungFunction& phi, double C,
                                            std::span<const std::pair<double, double>> pairs,
                                            double tolerance) {
  if (!(C >= 1.0)) throw std::invalid_argument("supermultiplicativity needs C >= 1");
  ConditionReport rep;
  rep.condition = "supermultiplicativity";
  rep.tolerance = tolerance;
  rep.grid_size = pairs.size();
  rep.worst_margin = kInf;
  rep.grid_lo = kInf;
  rep.grid_hi = 0.0;
  for (const auto& [a, b] : pairs) {
    if (!(a > 0.0 && a < 1.0 && a * b >= 1.0 * (1.0 - 1e-15) && b > a * b)) {
      throw std::invalid_argument("supermultiplicativity pair violates 0 < a < 1 <= ab < b");
    }
    rep.grid_lo = std::min(rep.grid_lo, a);
    rep.grid_hi = std::max(rep.grid_hi, b);
    const double lhs_log = std::log(phi(a)) + std::log(phi(b));
    const double rhs_log = std::log(phi(C * a * b));
    const double m = -std::expm1(lhs_log - rhs_log);
    if (m < rep.worst_margin) {
      rep.worst_margin = m;
      rep.witness = {a, b};
    }
  }
  rep.note = "margin = 1 - Phi(a)Phi(b)/Phi(Cab)";
  finish(rep);
  return rep;
}

ConditionReport check_inverse_product(const YoungFunction& phi, double C,
                                      std::span<const double> grid, double tolerance) {
  if (!(C >= 1.0)) throw std::invalid_argument("inverse product needs C >= 1");
  ConditionReport rep = start_report("inverse_product", grid, tolerance);
  for (double x : grid) {
    const double lx = std::log(x);
    const double m = std::expm1(std::log(C) + phi.log_inverse(lx) + phi.log_inverse(-lx));
    if (m < rep.worst_margin) {
      rep.worst_margin = m;
      rep.witness = {x};
    }
  }
  rep.note = "margin = C Phi^-1(x) Phi^-1(1/x) - 1";
  finish(rep);
  return rep;
}

ConditionReport check_convexity(const YoungFunction& phi, std::span<const double> grid,
                                double tolerance) {
  ConditionReport rep = start_report("convexity", grid, tolerance);
  double prev_slope = 0.0;
  double prev_t = 0.0;
  double prev_v = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = phi(grid[i]);
    const double slope = (v - prev_v) / (grid[i] - prev_t);
    if (i > 0) {
      const double m = rel(slope - prev_slope, slope, prev_slope);
      if (m < rep.worst_margin) {
        rep.worst_margin = m;
        rep.witness = {prev_t};
      }
    }
    prev_slope = slope;
    prev_t = grid[i];
    prev_v = v;
  }
  if (phi(0.0) != 0.0) {
    rep.worst_margin = -1.0;
    rep.witness = {0.0};
  }
  rep.note = "relative slope increments, starting from (0, 0)";
  finish(rep);
  return rep;
}

ConditionReport check_round_trip(const YoungFunction& phi, std::span<const double> grid,
                                 double tolerance) {
  ConditionReport rep = start_report("round_trip", grid, tolerance);
  for (double u : grid) {
    const double err = std::fabs(phi(phi.inverse(u)) / u - 1.0);
    if (-err < rep.worst_margin) {
      rep.worst_margin = -err;
      rep.witness = {u};
    }
  }
  finish(rep);
  return rep;
}

}  // namespace orlicz
