#pragma once

// Evaluation of trigonometric polynomials on uniform grids x_j = 2 pi j / M.
// Small supports use separable direct summation; otherwise a dense inverse
// FFT of the folded coefficient array is used.

#include <cstddef>
#include <vector>

#include "orlicz/trig.hpp"

namespace orlicz {

enum class EvalMethod { kAuto, kDirect, kFft };

struct GridValues {
  std::size_t M = 0;   // points per axis
  int dimension = 1;
  std::vector<double> re;  // row-major: index a * M + b, a along the first axis
  std::vector<double> im;

  std::size_t size() const { return re.size(); }
  std::vector<double> magnitudes() const;
  cplx at(std::size_t a, std::size_t b = 0) const {
    const std::size_t i = dimension == 1 ? a : a * M + b;
    return {re[i], im[i]};
  }
};

EvalMethod resolve_method(const TrigPoly& f, std::size_t M, EvalMethod requested);

GridValues evaluate_grid(const TrigPoly& f, std::size_t M, EvalMethod method = EvalMethod::kAuto);

// Values on the frame grid restricted to G_n, in the order of fr.points.
std::vector<cplx> sample_on_grid(const TrigPoly& f, const Frame& fr,
                                 EvalMethod method = EvalMethod::kAuto);

// Grid size per axis for L_Phi quadrature: at least oversample * (D + 1).
std::size_t quadrature_grid_size(const TrigPoly& f, int oversample = 8);

// ||f||_{L_1} by the rectangle rule on an M-point grid per axis (M = 0 picks
// the oversampled default).
double l1_norm(const TrigPoly& f, std::size_t M = 0);

}  // namespace orlicz
