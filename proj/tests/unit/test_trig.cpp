#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "orlicz/besov.hpp"
#include "orlicz/grid.hpp"
#include "orlicz/sampling.hpp"
#include "orlicz/trig.hpp"

using namespace orlicz;

TEST_CASE("coefficient bookkeeping prunes zeros") {
  TrigPoly f(2);
  f.set(1, 2, {1.0, 0.0});
  f.add(1, 2, {-1.0, 0.0});
  CHECK(f.empty());
  f.set(-3, 1, {0.0, 2.0});
  CHECK(f.degree() == 3);
  CHECK(f.coeff(-3, 1) == cplx(0.0, 2.0));
  CHECK(f.l2_norm() == doctest::Approx(2.0));
  const auto back = TrigPoly::from_json(f.to_json(), 2);
  CHECK(back.coefficients() == f.coefficients());
}

TEST_CASE("evaluation and exact translation") {
  TrigPoly f(1);
  f.set(2, 0, {1.0, 0.0});
  f.set(-1, 0, {0.5, -0.5});
  const double x = 0.7, h = 0.3;
  CHECK(std::abs(f.translated(h).eval(x) - f.eval(x + h)) < 1e-14);
  CHECK(std::abs(f.translate_difference(h).eval(x) - (f.eval(x + h) - f.eval(x))) < 1e-14);
}

TEST_CASE("Fejer kernel is nonnegative with unit mean") {
  const auto F = fejer(6);
  CHECK(F.coeff(0) == cplx(1.0));
  CHECK(F.coeff(3).real() == doctest::Approx(1.0 - 3.0 / 7.0));
  for (int j = 0; j < 50; ++j) CHECK(F.eval(2 * std::numbers::pi * j / 50).real() >= -1e-13);
  CHECK(l1_norm(F) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("closed-form coefficients match the built blocks") {
  for (int k = -1; k <= 5; ++k) {
    const auto f = build_f(k);
    for (const auto& [idx, c] : f.coefficients()) {
      CHECK(c.real() == doctest::Approx(f_coefficient(k, idx.first, idx.second)).epsilon(1e-14));
    }
  }
  for (int n = 0; n <= 6; ++n) {
    const auto g = build_g(n);
    for (int a = -70; a <= 70; a += 3) {
      for (int b = -70; b <= 70; b += 5) {
        CHECK(g.coeff(a, b).real() == doctest::Approx(g_coefficient(n, a, b)).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("telescoping: sum of g_j up to K+1 is f_K + f_{K-1}") {
  for (int K = 0; K <= 6; ++K) {
    TrigPoly sum(2);
    for (int j = 0; j <= K + 1; ++j) sum += build_g(j);
    const TrigPoly target = build_f(K) + build_f(K - 1);
    const TrigPoly diff = sum - target;
    double err = 0.0;
    for (const auto& [idx, c] : diff.coefficients()) err = std::max(err, std::abs(c));
    CAPTURE(K);
    CHECK(err <= 1e-14);
  }
}

TEST_CASE("support of g_n lies in the frame from level 4 on") {
  for (int n = 4; n <= 8; ++n) {
    const auto fr = frame(n);
    const auto g = build_g(n);
    for (const auto& [idx, c] : g.coefficients()) {
      CAPTURE(n);
      CHECK(fr.contains(idx.first, idx.second));
    }
  }
}

TEST_CASE("g_3 reaches into the hole of G_3") {
  // The hole [-1, 1]^2 of G_3 contains (1, 0), where g_3 = f_2 - f_0 has
  // coefficient 1 - 0 = 1. The frame claim is therefore only checked from n = 4.
  const auto fr = frame(3);
  CHECK_FALSE(fr.contains(1, 0));
  CHECK(g_coefficient(3, 1, 0) == doctest::Approx(1.0));
}

TEST_CASE("L1 norms of the dyadic blocks stay below 18") {
  for (int k = 0; k <= 8; ++k) {
    CAPTURE(k);
    CHECK(l1_norm(build_g(k)) <= 18.0);
  }
}

TEST_CASE("frames") {
  const auto fr = frame(4);
  CHECK(fr.half == 16);
  CHECK(fr.hole == 2);
  CHECK(fr.grid_points == 31u);
  CHECK(fr.omega() == 31u * 31u - 25u);
  CHECK_THROWS(frame(2));
  const auto low = frame_any_level(1);
  CHECK(low.omega() == 9u);
  CHECK(low.contains(0, 0));
}

TEST_CASE("frame samples agree with direct evaluation") {
  const auto fr = frame(4);
  const auto f = random_poly_on_frame(4, 9, CoefficientLaw::kGaussian, 0.2);
  const auto s = sample_on_grid(f, fr, EvalMethod::kFft);
  const auto d = sample_on_grid(f, fr, EvalMethod::kDirect);
  REQUIRE(s.size() == fr.omega());
  for (std::size_t i = 0; i < s.size(); i += 17) {
    const auto [k, l] = fr.points[i];
    const cplx ref = f.eval(fr.coordinate(k), fr.coordinate(l));
    CHECK(std::abs(s[i] - ref) < 1e-10);
    CHECK(std::abs(d[i] - ref) < 1e-10);
  }
}

TEST_CASE("grid evaluation: FFT equals direct summation") {
  const auto f = random_poly_2d(7, 21, CoefficientLaw::kGaussian);
  const auto a = evaluate_grid(f, 32, EvalMethod::kFft);
  const auto b = evaluate_grid(f, 32, EvalMethod::kDirect);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.re[i] == doctest::Approx(b.re[i]).epsilon(1e-11).scale(1.0));
    CHECK(a.im[i] == doctest::Approx(b.im[i]).epsilon(1e-11).scale(1.0));
  }
}

TEST_CASE("dyadic blocks reassemble the polynomial") {
  const auto f = random_poly_2d(12, 4, CoefficientLaw::kGaussian);
  // sum_n g_n = f_K + f_{K-1} equals 2 on low frequencies, so halve it.
  TrigPoly sum(2);
  const int last = last_dyadic_level(f.degree());
  for (int n = 0; n <= last + 2; ++n) sum += dyadic_block(n, f);
  const TrigPoly diff = sum.scaled(0.5) - f;
  double err = 0.0;
  for (const auto& [idx, c] : diff.coefficients()) err = std::max(err, std::abs(c));
  CHECK(err < 1e-13);
  CHECK(dyadic_block(last + 1, f).empty());
}
