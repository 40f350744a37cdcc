#pragma once

// Trigonometric polynomials on T and T^2 stored as sparse coefficient maps,
// the Fejer kernels, the dyadic f_k / g_k decomposition and the sampling
// frames G_n. All torus integrals use the normalized measure.

#include <complex>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <json.hpp>

namespace orlicz {

using cplx = std::complex<double>;

class TrigPoly {
 public:
  using Index = std::pair<int, int>;  // (k, l); l == 0 in dimension 1
  using Map = std::map<Index, cplx>;

  explicit TrigPoly(int dimension = 2);

  int dimension() const { return dim_; }
  // Exact zeros are pruned so the support is the set of stored indices.
  void set(int k, int l, cplx c);
  void add(int k, int l, cplx c);
  cplx coeff(int k, int l = 0) const;
  const Map& coefficients() const { return c_; }
  std::size_t support_size() const { return c_.size(); }
  bool empty() const { return c_.empty(); }
  // max |k|, |l| over the support (0 for the zero polynomial).
  int degree() const;

  // Direct summation of sum c_k e^{i k.x}.
  cplx eval(double x, double y = 0.0) const;
  // f(. + h): coefficients multiplied by e^{i k.h}.
  TrigPoly translated(double hx, double hy = 0.0) const;
  // f(. + h) - f
  TrigPoly translate_difference(double hx, double hy = 0.0) const;
  TrigPoly scaled(cplx s) const;
  // Parseval: (sum |c|^2)^{1/2}.
  double l2_norm() const;

  TrigPoly& operator+=(const TrigPoly& o);
  TrigPoly& operator-=(const TrigPoly& o);
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }

  // [[k, l, re, im], ...]
  nlohmann::json to_json() const;
  static TrigPoly from_json(const nlohmann::json& j, int dimension);

 private:
  int dim_;
  Map c_;
};

// One-dimensional Fejer kernel: coefficients 1 - |k|/(n+1) on [-n, n].
TrigPoly fejer(int n);
// F_{m,n}(x, y) = F_m(x) F_n(y).
TrigPoly fejer_2d(int m, int n);

// Per-axis factor of f_k as a map m -> coefficient, k >= 1:
// F_{2^k-1}(x)(e^{-i2^k x} + 1 + e^{i2^k x}).
std::map<int, double> f_axis_factor(int k);
// f_k for k >= -1 with f_{-1} = f_0 = F_{0,0}.
TrigPoly build_f(int k);
// g_0 = f_{-1}, g_1 = f_0, g_{k+1} = f_k - f_{k-2}.
TrigPoly build_g(int k);

// Closed-form coefficients of f_k and g_n at a lattice point.
double f_coefficient(int k, int a, int b);
double g_coefficient(int n, int a, int b);
// g_n * f evaluated through the closed-form coefficients of g_n.
TrigPoly dyadic_block(int n, const TrigPoly& f);

// Normalized-measure convolution: coefficientwise product.
TrigPoly convolve(const TrigPoly& g, const TrigPoly& f);

// Sampling frame: G_n = Z^2 in (-2^n, 2^n)^2 minus [-2^{n-3}, 2^{n-3}]^2, with
// the (2^{n+1}-1)^2 grid x_k = 2 pi (k + 2^n - 1) / (2^{n+1} - 1).
struct Frame {
  int level = 0;
  int half = 0;                 // 2^n
  int hole = -1;                // 2^{n-3}; -1 when no hole is removed
  std::size_t grid_points = 0;  // 2^{n+1} - 1 per axis
  std::vector<TrigPoly::Index> points;

  std::size_t omega() const { return points.size(); }
  bool contains(int k, int l) const;
  double spacing() const;
  double coordinate(int k) const;
  std::size_t grid_index(int k) const { return static_cast<std::size_t>(k + half - 1); }
};

// Requires n >= 3.
Frame frame(int n);
// Levels below 3 have no hole in the lattice (2^{n-3} < 1); the full square
// (-2^n, 2^n)^2 is used there so that the low dyadic blocks g_0, g_1, g_2 are
// covered.
Frame frame_any_level(int n);

}  // namespace orlicz
