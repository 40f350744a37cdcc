// AVX2 variants. Compiled with -mavx2 -mfma but without floating-point
// contraction, so each lane performs exactly the scalar operation sequence.

#include <immintrin.h>

#include <cmath>

#include "orlicz/simd/kernels.hpp"

namespace orlicz::simd {
namespace {

void complex_axpy(std::size_t n, double a_re, double a_im, const double* x_re,
                  const double* x_im, double* y_re, double* y_im) {
  const __m256d are = _mm256_set1_pd(a_re);
  const __m256d aim = _mm256_set1_pd(a_im);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xr = _mm256_loadu_pd(x_re + i);
    const __m256d xi = _mm256_loadu_pd(x_im + i);
    const __m256d re = _mm256_sub_pd(_mm256_mul_pd(are, xr), _mm256_mul_pd(aim, xi));
    const __m256d im = _mm256_add_pd(_mm256_mul_pd(are, xi), _mm256_mul_pd(aim, xr));
    _mm256_storeu_pd(y_re + i, _mm256_add_pd(_mm256_loadu_pd(y_re + i), re));
    _mm256_storeu_pd(y_im + i, _mm256_add_pd(_mm256_loadu_pd(y_im + i), im));
  }
  for (; i < n; ++i) {
    const double re = a_re * x_re[i] - a_im * x_im[i];
    const double im = a_re * x_im[i] + a_im * x_re[i];
    y_re[i] += re;
    y_im[i] += im;
  }
}

void complex_abs(std::size_t n, const double* re, const double* im, double* out) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r = _mm256_loadu_pd(re + i);
    const __m256d m = _mm256_loadu_pd(im + i);
    const __m256d sq = _mm256_add_pd(_mm256_mul_pd(r, r), _mm256_mul_pd(m, m));
    _mm256_storeu_pd(out + i, _mm256_sqrt_pd(sq));
  }
  for (; i < n; ++i) out[i] = std::sqrt(re[i] * re[i] + im[i] * im[i]);
}

double sum_squares(std::size_t n, const double* x) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d a = _mm256_loadu_pd(x + i);
    const __m256d b = _mm256_loadu_pd(x + i + 4);
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(a, a));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(b, b));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
  double acc = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) acc += x[i] * x[i];
  return acc;
}

double max_abs(std::size_t n, const double* x) {
  const __m256d sign_mask = _mm256_set1_pd(-0.0);
  __m256d m = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    m = _mm256_max_pd(m, _mm256_andnot_pd(sign_mask, _mm256_loadu_pd(x + i)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, m);
  double result = 0.0;
  for (double v : lanes) result = v > result ? v : result;
  for (; i < n; ++i) {
    const double a = std::fabs(x[i]);
    if (a > result) result = a;
  }
  return result;
}

std::uint64_t count_symmetric_difference(std::size_t n, int dimension, const double* coords,
                                         double radius_sq, double shift) {
  const __m256d r2 = _mm256_set1_pd(radius_sq);
  const __m256d sh = _mm256_set1_pd(shift);
  std::uint64_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x0 = _mm256_loadu_pd(coords + i);
    const __m256d xs = _mm256_sub_pd(x0, sh);
    __m256d rest = _mm256_setzero_pd();
    for (int axis = 1; axis < dimension; ++axis) {
      const __m256d v = _mm256_loadu_pd(coords + static_cast<std::size_t>(axis) * n + i);
      rest = _mm256_add_pd(rest, _mm256_mul_pd(v, v));
    }
    const __m256d d1 = _mm256_add_pd(_mm256_mul_pd(x0, x0), rest);
    const __m256d d2 = _mm256_add_pd(_mm256_mul_pd(xs, xs), rest);
    const __m256d in1 = _mm256_cmp_pd(d1, r2, _CMP_LE_OQ);
    const __m256d in2 = _mm256_cmp_pd(d2, r2, _CMP_LE_OQ);
    const int mask = _mm256_movemask_pd(_mm256_xor_pd(in1, in2));
    count += static_cast<std::uint64_t>(__builtin_popcount(static_cast<unsigned>(mask)));
  }
  for (; i < n; ++i) {
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

const KernelTable& avx2_kernel_table() {
  static const KernelTable table{Isa::kAvx2,  complex_axpy, complex_abs,
                                 sum_squares, max_abs,      count_symmetric_difference};
  return table;
}

}  // namespace orlicz::simd
