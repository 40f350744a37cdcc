#pragma once

#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace orlicz::detail {

// Root of an increasing function on [lo, hi] with f(lo) <= 0 <= f(hi).
// Uses TOMS 748 to full double precision; exact zeros at the ends are returned
// directly.
template <class F>
double solve_increasing(F&& f, double lo, double hi, std::uintmax_t max_iter = 200) {
  const double flo = f(lo);
  if (flo == 0.0) return lo;
  const double fhi = f(hi);
  if (fhi == 0.0) return hi;
  if (!(flo < 0.0 && fhi > 0.0)) {
    // Rounding at a bracket end; return the end closest to a sign change.
    if (flo > 0.0) return lo;
    return hi;
  }
  std::uintmax_t iters = max_iter;
  const auto result = boost::math::tools::toms748_solve(
      f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(52), iters);
  return 0.5 * (result.first + result.second);
}

// Increasing root to an absolute bracket width; suited to log-scale variables
// that may sit near zero.
template <class F>
double solve_increasing_abs(F&& f, double lo, double hi, double abs_tol,
                            std::uintmax_t max_iter = 200) {
  const double flo = f(lo);
  if (flo == 0.0) return lo;
  const double fhi = f(hi);
  if (fhi == 0.0) return hi;
  if (!(flo < 0.0 && fhi > 0.0)) return flo > 0.0 ? lo : hi;
  std::uintmax_t iters = max_iter;
  auto tol = [abs_tol](double a, double b) { return std::fabs(b - a) <= abs_tol; };
  const auto result = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, iters);
  return 0.5 * (result.first + result.second);
}

// Same for a decreasing function with f(lo) >= 0 >= f(hi).
template <class F>
double solve_decreasing(F&& f, double lo, double hi, std::uintmax_t max_iter = 200) {
  return solve_increasing([&](double x) { return -f(x); }, lo, hi, max_iter);
}

}  // namespace orlicz::detail
