#include "orlicz/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <limits>

namespace orlicz::quad {

double gauss_kronrod(const std::function<double(double)>& f, double a, double b, double rel_tol,
                     unsigned max_depth, double* error) {
  double err = 0.0;
  const double v =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, max_depth, rel_tol, &err);
  if (error) *error = err;
  return v;
}

double tanh_sinh(const std::function<double(double)>& f, double a, double b, double rel_tol) {
  static thread_local boost::math::quadrature::tanh_sinh<double> integrator;
  return integrator.integrate(f, a, b, rel_tol);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kConvergent:
      return "convergent";
    case Verdict::kDivergent:
      return "divergent";
    case Verdict::kIndeterminate:
      return "indeterminate";
  }
  return "unknown";
}

PieceResult integrate_exp_pieces(const std::function<double(double)>& log_integrand, double y0,
                                 const PieceOptions& opt) {
  PieceResult res;
  auto integrand = [&](double y) {
    const double l = log_integrand(y);
    return l == -std::numeric_limits<double>::infinity() ? 0.0 : std::exp(l);
  };
  double prev = -1.0;
  int small_run = 0;
  int div_run = 0;
  bool stopped = false;
  for (std::size_t j = 0;; ++j) {
    const double a = y0 + opt.step * static_cast<double>(j);
    if (a >= y0 + opt.y_max) break;
    const double b = a + opt.step;
    const double piece = gauss_kronrod(integrand, a, b, opt.rel_tol, 10);
    if (!std::isfinite(piece)) {
      res.verdict = Verdict::kDivergent;
      res.value = std::numeric_limits<double>::infinity();
      res.tail_bound = std::numeric_limits<double>::infinity();
      stopped = true;
      break;
    }
    res.piece_values.push_back(piece);
    res.value += piece;
    ++res.pieces;
    if (prev >= 0.0) {
      double ratio;
      if (prev > 0.0) {
        ratio = piece / prev;
      } else {
        ratio = piece > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
      }
      res.last_ratio = ratio;
      div_run = ratio >= opt.divergent_ratio ? div_run + 1 : 0;
      if (div_run >= opt.divergent_run) {
        res.verdict = Verdict::kDivergent;
        res.tail_bound = std::numeric_limits<double>::infinity();
        stopped = true;
        break;
      }
      small_run = piece <= opt.stop_rel * res.value ? small_run + 1 : 0;
      if (small_run >= opt.stop_count && ratio < opt.convergent_ratio && ratio < 1.0) {
        const double tail = piece * ratio / (1.0 - ratio);
        if (tail <= opt.tail_rel * res.value || res.value == 0.0) {
          res.tail_bound = tail;
          res.verdict = Verdict::kConvergent;
          stopped = true;
          break;
        }
      }
    }
    prev = piece;
  }
  if (!stopped) {
    res.truncated = true;
    const double r = res.last_ratio;
    const double last = res.piece_values.empty() ? 0.0 : res.piece_values.back();
    if (r < 1.0) {
      res.tail_bound = last * r / (1.0 - r);
    } else {
      res.tail_bound = std::numeric_limits<double>::infinity();
    }
    if (r < opt.convergent_ratio && r < 1.0) {
      res.verdict = Verdict::kConvergent;
    } else if (r >= opt.divergent_ratio && r > 1.0) {
      res.verdict = Verdict::kDivergent;
    } else {
      res.verdict = Verdict::kIndeterminate;
    }
  }
  return res;
}

PieceOptions endpoint_options() {
  PieceOptions o;
  o.step = std::log(10.0);
  o.y_max = 2000.0 * std::log(10.0);
  o.stop_rel = 1e-14;
  o.stop_count = 2;
  o.tail_rel = 1e-12;
  o.convergent_ratio = 0.95;
  o.divergent_ratio = 1.0 / 0.95;
  o.divergent_run = 3;
  o.rel_tol = 1e-12;
  return o;
}

PieceResult integrate_endpoint_log(const std::function<double(double)>& log_h_of_log_x,
                                   double X, const PieceOptions& opt) {
  const double lX = std::log(X);
  return integrate_exp_pieces(
      [&](double y) {
        const double lx = lX - y;
        return log_h_of_log_x(lx) + lx;
      },
      0.0, opt);
}

}  // namespace orlicz::quad
