#include "orlicz/simd/kernels.hpp"

#include <cmath>

namespace orlicz::simd {
namespace {

void complex_axpy(std::size_t n, double a_re, double a_im, const double* x_re,
                  const double* x_im, double* y_re, double* y_im) {
  for (std::size_t i = 0; i < n; ++i) {
    const double re = a_re * x_re[i] - a_im * x_im[i];
    const double im = a_re * x_im[i] + a_im * x_re[i];
    y_re[i] += re;
    y_im[i] += im;
  }
}

void complex_abs(std::size_t n, const double* re, const double* im, double* out) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::sqrt(re[i] * re[i] + im[i] * im[i]);
  }
}

double sum_squares(std::size_t n, const double* x) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

double max_abs(std::size_t n, const double* x) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::fabs(x[i]);
    if (a > m) m = a;
  }
  return m;
}

std::uint64_t count_symmetric_difference(std::size_t n, int dimension, const double* coords,
                                         double radius_sq, double shift) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x0 = coords[i];
    const double xs = x0 - shift;
    double rest = 0.0;
    for (int axis = 1; axis < dimension; ++axis) {
      const double v = coords[static_cast<std::size_t>(axis) * n + i];
      rest += v * v;
    }
    const bool in_first = x0 * x0 + rest <= radius_sq;
    const bool in_second = xs * xs + rest <= radius_sq;
    count += static_cast<std::uint64_t>(in_first != in_second);
  }
  return count;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::kScalar,  complex_axpy, complex_abs,
                                 sum_squares,   max_abs,      count_symmetric_difference};
  return table;
}

}  // namespace orlicz::simd
