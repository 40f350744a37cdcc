#include "orlicz/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "orlicz/parallel.hpp"

namespace orlicz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

quad::PieceOptions piece_options(const KolyadaOptions& opt) {
  quad::PieceOptions p;
  p.step = std::log(10.0);
  p.y_max = opt.log_t_max;
  p.stop_rel = opt.stop_rel;
  p.stop_count = 2;
  p.tail_rel = opt.tail_rel;
  p.convergent_ratio = 1.0;
  p.divergent_ratio = opt.divergence_ratio;
  p.divergent_run = opt.divergence_run;
  p.rel_tol = opt.rel_tol;
  return p;
}

// int_0^sigma exp(L(u)) du in pieces of unit length.
double finite_log_integral(const std::function<double(double)>& L, double sigma, double rel_tol) {
  if (sigma <= 0.0) return 0.0;
  auto g = [&](double u) {
    const double l = L(u);
    return l == -kInf ? 0.0 : std::exp(l);
  };
  double total = 0.0;
  const int pieces = static_cast<int>(std::ceil(sigma));
  for (int j = 0; j < pieces; ++j) {
    const double a = j;
    const double b = std::min(sigma, a + 1.0);
    if (b > a) total += quad::gauss_kronrod(g, a, b, rel_tol, 12);
  }
  return total;
}

ConditionEvaluation assemble(double s, double first, const quad::PieceResult& second) {
  ConditionEvaluation e;
  e.s = s;
  e.first_term = first;
  e.second_term = second.value;
  e.tail_bound = second.tail_bound;
  e.truncated = second.truncated;
  e.divergent = second.verdict == quad::Verdict::kDivergent;
  e.decades = second.pieces;
  e.total = e.divergent ? kInf : first + second.value;
  return e;
}

SupResult summarize(std::vector<ConditionEvaluation> evals, double slope_bound) {
  SupResult r;
  r.sup_value = -kInf;
  std::vector<double> s, y;
  for (const auto& e : evals) {
    if (e.total > r.sup_value) {
      r.sup_value = e.total;
      r.witness = e.s;
    }
    r.any_divergent = r.any_divergent || e.divergent;
    s.push_back(e.s);
    y.push_back(e.total);
  }
  if (!r.any_divergent) {
    r.slope = top_decade_slope(s, y);
    r.bounded = std::fabs(r.slope) < slope_bound;
  } else {
    r.slope = kInf;
    r.bounded = false;
  }
  r.evaluations = std::move(evals);
  return r;
}

}  // namespace

ConditionEvaluation kolyada_eval(const YoungFunction& phi, const Weight& psi, int d, double s,
                                 const KolyadaOptions& opt) {
  if (d < 1) throw std::invalid_argument("dimension must be at least 1");
  if (!(s >= 1.0)) throw std::invalid_argument("kolyada_eval needs s >= 1");
  const double sigma = std::log(s);
  const double shift = (d - 1) * sigma;
  const double c = shift - phi.log_inverse(d * sigma);
  const double first = finite_log_integral(
      [&](double u) { return psi.log_value(u) + c; }, sigma, opt.rel_tol);
  const auto second = quad::integrate_exp_pieces(
      [&](double u) { return psi.log_value(u) + shift - phi.log_inverse(u + shift); }, sigma,
      piece_options(opt));
  return assemble(s, first, second);
}

SupResult kolyada_sup(const YoungFunction& phi, const Weight& psi, int d,
                      const std::vector<double>& s_grid, const KolyadaOptions& opt) {
  if (s_grid.empty()) throw std::invalid_argument("s grid must be nonempty");
  auto evals = parallel_map(s_grid.size(),
                            [&](std::size_t i) { return kolyada_eval(phi, psi, d, s_grid[i], opt); });
  return summarize(std::move(evals), opt.slope_bound);
}

SupResult theorem2_condition1(const YoungFunction& phi, const std::vector<double>& s_grid,
                              const KolyadaOptions& opt) {
  if (s_grid.empty()) throw std::invalid_argument("s grid must be nonempty");
  auto one = [&](std::size_t i) {
    const double s = s_grid[i];
    if (!(s >= 1.0)) throw std::invalid_argument("theorem2_condition1 needs s >= 1");
    const double sigma = std::log(s);
    // s / Phi^{-1}(s^2) int_1^s Phi^{-1}(t^2) / t^2 dt
    const double lead = sigma - phi.log_inverse(2.0 * sigma);
    const double first = finite_log_integral(
        [&](double u) { return phi.log_inverse(2.0 * u) - u + lead; }, sigma, opt.rel_tol);
    // int_s^inf Phi^{-1}(t^2) s / (t^2 Phi^{-1}(t s)) dt
    const auto second = quad::integrate_exp_pieces(
        [&](double u) {
          return phi.log_inverse(2.0 * u) + sigma - u - phi.log_inverse(u + sigma);
        },
        sigma, piece_options(opt));
    return assemble(s, first, second);
  };
  return summarize(parallel_map(s_grid.size(), one), opt.slope_bound);
}

ConditionReport theorem8_hypothesis(const YoungFunction& phi, const Weight& psi,
                                    const std::vector<double>& t_grid, double tolerance) {
  ConditionReport rep;
  rep.condition = "theorem8_hypothesis";
  rep.tolerance = tolerance;
  rep.grid_size = t_grid.size();
  rep.worst_margin = kInf;
  if (!t_grid.empty()) {
    rep.grid_lo = *std::min_element(t_grid.begin(), t_grid.end());
    rep.grid_hi = *std::max_element(t_grid.begin(), t_grid.end());
  }
  for (double t : t_grid) {
    if (!(t > 0.0)) throw std::invalid_argument("t grid must be positive");
    const double u = std::log(t);
    // t Psi(t) / Phi^{-1}(t^2) - 1
    const double lv = psi.log_value(u);
    const double m = lv == -kInf ? -1.0 : std::expm1(lv + u - phi.log_inverse(2.0 * u));
    if (m < rep.worst_margin) {
      rep.worst_margin = m;
      rep.witness = {t};
    }
  }
  if (rep.worst_margin == kInf) rep.worst_margin = 0.0;
  rep.pass = rep.worst_margin >= -tolerance;
  rep.note = "margin = t Psi(t) / Phi^-1(t^2) - 1";
  return rep;
}

ConditionReport embedding_hypothesis(const YoungFunction& phi, int d, double a, double b,
                                     const std::vector<double>& t_grid) {
  if (d < 2) throw std::invalid_argument("embedding hypothesis needs d >= 2");
  const double e = static_cast<double>(d) / (d - 1);
  ConditionReport rep;
  rep.condition = "lebesgue_embedding_sufficient";
  rep.grid_size = t_grid.size();
  rep.worst_margin = kInf;
  if (!t_grid.empty()) {
    rep.grid_lo = *std::min_element(t_grid.begin(), t_grid.end());
    rep.grid_hi = *std::max_element(t_grid.begin(), t_grid.end());
  }
  for (double t : t_grid) {
    const double bound = a * std::pow(t, e) + b;
    const double m = 1.0 - phi(t) / bound;
    if (m < rep.worst_margin) {
      rep.worst_margin = m;
      rep.witness = {t};
    }
  }
  if (rep.worst_margin == kInf) rep.worst_margin = 0.0;
  rep.pass = rep.worst_margin >= 0.0;
  rep.note = "informative: Phi(t) <= a t^{d/(d-1)} + b is sufficient, not necessary";
  return rep;
}

double top_decade_slope(const std::vector<double>& s, const std::vector<double>& y) {
  if (s.empty()) return 0.0;
  const double s_max = *std::max_element(s.begin(), s.end());
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= s_max / 10.0 * (1.0 - 1e-12)) {
      xs.push_back(std::log(s[i]));
      ys.push_back(y[i]);
    }
  }
  if (xs.size() < 2) return 0.0;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= xs.size();
  my /= ys.size();
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxx > 0.0 ? sxy / sxx : 0.0;
}

}  // namespace orlicz
