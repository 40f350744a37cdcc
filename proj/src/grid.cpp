#include "orlicz/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "orlicz/simd/kernels.hpp"

namespace orlicz {

namespace {

// FFTW planning is not thread-safe; execution on distinct arrays is.
std::mutex& fftw_plan_mutex() {
  static std::mutex m;
  return m;
}

std::size_t wrap(long long k, std::size_t M) {
  const long long m = static_cast<long long>(M);
  long long r = k % m;
  if (r < 0) r += m;
  return static_cast<std::size_t>(r);
}

// e^{i k x_j} for j = 0..M-1 with the phase reduced exactly modulo M.
void phase_row(long long k, std::size_t M, double* re, double* im) {
  const double step = 2.0 * std::numbers::pi / static_cast<double>(M);
  const std::size_t kk = wrap(k, M);
  std::size_t acc = 0;
  for (std::size_t j = 0; j < M; ++j) {
    const double a = step * static_cast<double>(acc);
    re[j] = std::cos(a);
    im[j] = std::sin(a);
    acc += kk;
    if (acc >= M) acc -= M;
  }
}

GridValues evaluate_direct(const TrigPoly& f, std::size_t M) {
  const auto& kt = simd::kernels();
  GridValues g;
  g.M = M;
  g.dimension = f.dimension();
  if (f.dimension() == 1) {
    g.re.assign(M, 0.0);
    g.im.assign(M, 0.0);
    std::vector<double> er(M), ei(M);
    for (const auto& [idx, c] : f.coefficients()) {
      phase_row(idx.first, M, er.data(), ei.data());
      kt.complex_axpy(M, c.real(), c.imag(), er.data(), ei.data(), g.re.data(), g.im.data());
    }
    return g;
  }
  // Group by first index: R_k(b) = sum_l c_{kl} e^{i l y_b}.
  std::map<int, std::vector<double>> rows;  // k -> [re(M), im(M)]
  std::map<int, std::vector<double>> col_phase;
  for (const auto& [idx, c] : f.coefficients()) {
    auto& ph = col_phase[idx.second];
    if (ph.empty()) {
      ph.resize(2 * M);
      phase_row(idx.second, M, ph.data(), ph.data() + M);
    }
    auto& row = rows[idx.first];
    if (row.empty()) row.assign(2 * M, 0.0);
    kt.complex_axpy(M, c.real(), c.imag(), ph.data(), ph.data() + M, row.data(), row.data() + M);
  }
  g.re.assign(M * M, 0.0);
  g.im.assign(M * M, 0.0);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(M);
  for (std::size_t a = 0; a < M; ++a) {
    double* out_re = g.re.data() + a * M;
    double* out_im = g.im.data() + a * M;
    for (const auto& [k, row] : rows) {
      const double ang = step * static_cast<double>((wrap(k, M) * a) % M);
      kt.complex_axpy(M, std::cos(ang), std::sin(ang), row.data(), row.data() + M, out_re, out_im);
    }
  }
  return g;
}

GridValues evaluate_fft(const TrigPoly& f, std::size_t M) {
  const std::size_t n = f.dimension() == 1 ? M : M * M;
  std::unique_ptr<fftw_complex, decltype(&fftw_free)> buf(fftw_alloc_complex(n), &fftw_free);
  if (!buf) throw std::bad_alloc();
  fftw_complex* data = buf.get();
  for (std::size_t i = 0; i < n; ++i) {
    data[i][0] = 0.0;
    data[i][1] = 0.0;
  }
  for (const auto& [idx, c] : f.coefficients()) {
    const std::size_t i = f.dimension() == 1
                              ? wrap(idx.first, M)
                              : wrap(idx.first, M) * M + wrap(idx.second, M);
    data[i][0] += c.real();
    data[i][1] += c.imag();
  }
  fftw_plan plan;
  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex());
    const int m = static_cast<int>(M);
    plan = f.dimension() == 1
               ? fftw_plan_dft_1d(m, data, data, FFTW_BACKWARD, FFTW_ESTIMATE)
               : fftw_plan_dft_2d(m, m, data, data, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard<std::mutex> lock(fftw_plan_mutex());
    fftw_destroy_plan(plan);
  }
  GridValues g;
  g.M = M;
  g.dimension = f.dimension();
  g.re.resize(n);
  g.im.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.re[i] = data[i][0];
    g.im[i] = data[i][1];
  }
  return g;
}

}  // namespace

std::vector<double> GridValues::magnitudes() const {
  std::vector<double> out(re.size());
  simd::kernels().complex_abs(re.size(), re.data(), im.data(), out.data());
  return out;
}

EvalMethod resolve_method(const TrigPoly& f, std::size_t M, EvalMethod requested) {
  if (requested != EvalMethod::kAuto) return requested;
  const std::size_t points = f.dimension() == 1 ? M : M * M;
  return points >= 4 * f.support_size() ? EvalMethod::kFft : EvalMethod::kDirect;
}

GridValues evaluate_grid(const TrigPoly& f, std::size_t M, EvalMethod method) {
  if (M == 0) throw std::invalid_argument("grid size must be positive");
  if (resolve_method(f, M, method) == EvalMethod::kFft) return evaluate_fft(f, M);
  return evaluate_direct(f, M);
}

std::vector<cplx> sample_on_grid(const TrigPoly& f, const Frame& fr, EvalMethod method) {
  if (f.dimension() != 2) throw std::invalid_argument("frame sampling needs a 2-D polynomial");
  const GridValues g = evaluate_grid(f, fr.grid_points, method);
  std::vector<cplx> out;
  out.reserve(fr.points.size());
  for (const auto& [k, l] : fr.points) out.push_back(g.at(fr.grid_index(k), fr.grid_index(l)));
  return out;
}

std::size_t quadrature_grid_size(const TrigPoly& f, int oversample) {
  return static_cast<std::size_t>(oversample) * static_cast<std::size_t>(f.degree() + 1);
}

double l1_norm(const TrigPoly& f, std::size_t M) {
  if (M == 0) M = quadrature_grid_size(f);
  const auto mags = evaluate_grid(f, M).magnitudes();
  double s = 0.0;
  for (double v : mags) s += v;
  return s / static_cast<double>(mags.size());
}

}  // namespace orlicz
