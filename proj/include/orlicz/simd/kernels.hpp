#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference
// implementation; vector variants are compiled in separate translation units
// and selected once at startup. Elementwise kernels and the counting kernel
// produce bit-identical results across variants. Reductions may differ in the
// last few ulps because the summation order differs.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace orlicz::simd {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;

  // y += a * x over split (re, im) arrays of length n.
  void (*complex_axpy)(std::size_t n, double a_re, double a_im, const double* x_re,
                       const double* x_im, double* y_re, double* y_im);

  // out[i] = sqrt(re[i]^2 + im[i]^2)
  void (*complex_abs)(std::size_t n, const double* re, const double* im, double* out);

  // sum of x[i]^2
  double (*sum_squares)(std::size_t n, const double* x);

  // max |x[i]| (0 for n == 0)
  double (*max_abs)(std::size_t n, const double* x);

  // Counts points lying in exactly one of the closed balls B(0, r) and
  // B(shift * e_0, r). Coordinates are stored axis-major: coords[axis * n + i].
  std::uint64_t (*count_symmetric_difference)(std::size_t n, int dimension,
                                              const double* coords, double radius_sq,
                                              double shift);
};

const KernelTable& scalar_kernels();

// nullptr when the variant was not compiled in or the CPU lacks support.
const KernelTable* avx2_kernels();

// The table used by the library. Honors ORLICZ_SIMD=scalar|avx2 in the
// environment; otherwise picks the widest supported variant.
const KernelTable& kernels();

Isa active_isa();

}  // namespace orlicz::simd
