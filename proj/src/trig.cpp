#include "orlicz/trig.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace orlicz {

TrigPoly::TrigPoly(int dimension) : dim_(dimension) {
  if (dimension != 1 && dimension != 2) throw std::invalid_argument("dimension must be 1 or 2");
}

void TrigPoly::set(int k, int l, cplx c) {
  if (dim_ == 1 && l != 0) throw std::invalid_argument("1-D polynomial index must have l == 0");
  if (c == cplx(0.0, 0.0)) {
    c_.erase({k, l});
  } else {
    c_[{k, l}] = c;
  }
}

void TrigPoly::add(int k, int l, cplx c) {
  if (dim_ == 1 && l != 0) throw std::invalid_argument("1-D polynomial index must have l == 0");
  auto it = c_.find({k, l});
  if (it == c_.end()) {
    if (c != cplx(0.0, 0.0)) c_.emplace(Index{k, l}, c);
    return;
  }
  it->second += c;
  if (it->second == cplx(0.0, 0.0)) c_.erase(it);
}

cplx TrigPoly::coeff(int k, int l) const {
  const auto it = c_.find({k, l});
  return it == c_.end() ? cplx(0.0, 0.0) : it->second;
}

int TrigPoly::degree() const {
  int d = 0;
  for (const auto& [idx, c] : c_) d = std::max({d, std::abs(idx.first), std::abs(idx.second)});
  return d;
}

cplx TrigPoly::eval(double x, double y) const {
  cplx s(0.0, 0.0);
  for (const auto& [idx, c] : c_) {
    const double phase = idx.first * x + idx.second * y;
    s += c * cplx(std::cos(phase), std::sin(phase));
  }
  return s;
}

TrigPoly TrigPoly::translated(double hx, double hy) const {
  TrigPoly out(dim_);
  for (const auto& [idx, c] : c_) {
    const double phase = idx.first * hx + idx.second * hy;
    out.set(idx.first, idx.second, c * cplx(std::cos(phase), std::sin(phase)));
  }
  return out;
}

TrigPoly TrigPoly::translate_difference(double hx, double hy) const {
  TrigPoly out(dim_);
  for (const auto& [idx, c] : c_) {
    const double phase = idx.first * hx + idx.second * hy;
    // e^{i phase} - 1 = 2i sin(phase/2) e^{i phase/2}, free of cancellation.
    const double s = std::sin(0.5 * phase);
    const cplx factor = cplx(-2.0 * s * s, 2.0 * s * std::cos(0.5 * phase));
    out.set(idx.first, idx.second, c * factor);
  }
  return out;
}

TrigPoly TrigPoly::scaled(cplx s) const {
  TrigPoly out(dim_);
  for (const auto& [idx, c] : c_) out.set(idx.first, idx.second, c * s);
  return out;
}

double TrigPoly::l2_norm() const {
  double s = 0.0;
  for (const auto& [idx, c] : c_) s += std::norm(c);
  return std::sqrt(s);
}

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [idx, c] : o.c_) add(idx.first, idx.second, c);
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  for (const auto& [idx, c] : o.c_) add(idx.first, idx.second, -c);
  return *this;
}

nlohmann::json TrigPoly::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [idx, c] : c_) arr.push_back({idx.first, idx.second, c.real(), c.imag()});
  return arr;
}

TrigPoly TrigPoly::from_json(const nlohmann::json& j, int dimension) {
  TrigPoly p(dimension);
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4) throw std::invalid_argument("coefficient entries are [k, l, re, im]");
    p.add(e[0].get<int>(), e[1].get<int>(), cplx(e[2].get<double>(), e[3].get<double>()));
  }
  return p;
}

TrigPoly fejer(int n) {
  if (n < 0) throw std::invalid_argument("fejer needs n >= 0");
  TrigPoly p(1);
  for (int k = -n; k <= n; ++k) {
    p.set(k, 0, 1.0 - std::abs(k) / static_cast<double>(n + 1));
  }
  return p;
}

TrigPoly fejer_2d(int m, int n) {
  const TrigPoly a = fejer(m);
  const TrigPoly b = fejer(n);
  TrigPoly p(2);
  for (const auto& [i, ca] : a.coefficients()) {
    for (const auto& [j, cb] : b.coefficients()) p.set(i.first, j.first, ca * cb);
  }
  return p;
}

std::map<int, double> f_axis_factor(int k) {
  if (k < 1) throw std::invalid_argument("f_axis_factor needs k >= 1");
  const int s = 1 << k;
  auto tri = [s](int m) { return std::max(0.0, 1.0 - std::abs(m) / static_cast<double>(s)); };
  std::map<int, double> out;
  for (int m = -2 * s + 1; m <= 2 * s - 1; ++m) {
    const double v = tri(m) + tri(m - s) + tri(m + s);
    if (v != 0.0) out[m] = v;
  }
  return out;
}

TrigPoly build_f(int k) {
  if (k < -1) throw std::invalid_argument("build_f needs k >= -1");
  if (k <= 0) return fejer_2d(0, 0);
  const auto axis = f_axis_factor(k);
  TrigPoly p(2);
  for (const auto& [a, ca] : axis) {
    for (const auto& [b, cb] : axis) p.set(a, b, ca * cb);
  }
  return p;
}

TrigPoly build_g(int k) {
  if (k < 0) throw std::invalid_argument("build_g needs k >= 0");
  if (k == 0) return build_f(-1);
  if (k == 1) return build_f(0);
  return build_f(k - 1) - build_f(k - 3);
}

double f_coefficient(int k, int a, int b) {
  if (k < -1) throw std::invalid_argument("f_coefficient needs k >= -1");
  if (k <= 0) return a == 0 && b == 0 ? 1.0 : 0.0;
  const int s = 1 << k;
  auto tri = [s](int m) { return std::max(0.0, 1.0 - std::abs(m) / static_cast<double>(s)); };
  auto axis = [&](int m) { return tri(m) + tri(m - s) + tri(m + s); };
  return axis(a) * axis(b);
}

double g_coefficient(int n, int a, int b) {
  if (n < 0) throw std::invalid_argument("g_coefficient needs n >= 0");
  if (n == 0) return f_coefficient(-1, a, b);
  if (n == 1) return f_coefficient(0, a, b);
  return f_coefficient(n - 1, a, b) - f_coefficient(n - 3, a, b);
}

TrigPoly dyadic_block(int n, const TrigPoly& f) {
  if (f.dimension() != 2) throw std::invalid_argument("dyadic_block needs a 2-D polynomial");
  TrigPoly out(2);
  for (const auto& [idx, c] : f.coefficients()) {
    const double g = g_coefficient(n, idx.first, idx.second);
    if (g != 0.0) out.set(idx.first, idx.second, c * g);
  }
  return out;
}

TrigPoly convolve(const TrigPoly& g, const TrigPoly& f) {
  if (g.dimension() != f.dimension()) throw std::invalid_argument("convolve: dimension mismatch");
  const TrigPoly& small = g.support_size() <= f.support_size() ? g : f;
  const TrigPoly& large = &small == &g ? f : g;
  TrigPoly out(g.dimension());
  for (const auto& [idx, c] : small.coefficients()) {
    const cplx d = large.coeff(idx.first, idx.second);
    if (d != cplx(0.0, 0.0)) out.set(idx.first, idx.second, c * d);
  }
  return out;
}

bool Frame::contains(int k, int l) const {
  if (std::abs(k) >= half || std::abs(l) >= half) return false;
  if (hole >= 0 && std::abs(k) <= hole && std::abs(l) <= hole) return false;
  return true;
}

double Frame::spacing() const { return 2.0 * std::numbers::pi / static_cast<double>(grid_points); }

double Frame::coordinate(int k) const {
  return 2.0 * std::numbers::pi * static_cast<double>(k + half - 1) /
         static_cast<double>(grid_points);
}

namespace {

Frame build_frame(int n, int hole) {
  Frame fr;
  fr.level = n;
  fr.half = 1 << n;
  fr.hole = hole;
  fr.grid_points = static_cast<std::size_t>(2 * fr.half - 1);
  for (int k = -fr.half + 1; k <= fr.half - 1; ++k) {
    for (int l = -fr.half + 1; l <= fr.half - 1; ++l) {
      if (fr.contains(k, l)) fr.points.emplace_back(k, l);
    }
  }
  return fr;
}

}  // namespace

Frame frame(int n) {
  if (n < 3) throw std::invalid_argument("frame needs n >= 3");
  if (n > 14) throw std::invalid_argument("frame level too large");
  return build_frame(n, 1 << (n - 3));
}

Frame frame_any_level(int n) {
  if (n < 0) throw std::invalid_argument("frame level must be nonnegative");
  if (n >= 3) return frame(n);
  return build_frame(n, -1);
}

}  // namespace orlicz
