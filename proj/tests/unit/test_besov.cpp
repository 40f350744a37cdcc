#include <doctest.h>

#include <cmath>

#include "orlicz/besov.hpp"
#include "orlicz/luxemburg.hpp"
#include "orlicz/sampling.hpp"

using namespace orlicz;

TEST_CASE("modulus of a single harmonic") {
  TrigPoly f(2);
  f.set(3, 0, {1.0, 0.0});
  const auto phi = YoungFunction::power(2.0);
  // |e^{i3h} - 1| is largest along the first axis.
  CHECK(modulus(f, 0.1, phi) == doctest::Approx(2.0 * std::sin(0.15)).epsilon(1e-9));
  TrigPoly c(2);
  c.set(0, 0, {2.0, 0.0});
  CHECK(modulus(c, 0.1, phi) == 0.0);
}

TEST_CASE("modulus is nondecreasing in t") {
  const auto f = random_poly_2d(4, 2, CoefficientLaw::kGaussian);
  const auto phi = YoungFunction::power(1.5);
  double prev = 0.0;
  for (double t : {0.01, 0.05, 0.2, 0.5}) {
    const double m = modulus(f, t, phi);
    CHECK(m >= prev * (1.0 - 1e-9));
    prev = m;
  }
}

TEST_CASE("classical norm converges as levels are added") {
  const auto f = random_poly_2d(3, 5, CoefficientLaw::kGaussian);
  BesovParams a(YoungFunction::power(2.0), Weight::power(0.25));
  a.n_max = 40;
  BesovParams b = a;
  b.n_max = 80;
  const auto na = besov_norm_classical(f, a);
  const auto nb = besov_norm_classical(f, b);
  CHECK(na.terms.size() == 41u);
  CHECK(nb.value == doctest::Approx(na.value).epsilon(1e-8));
  CHECK(na.lphi == doctest::Approx(f.l2_norm()).epsilon(1e-12));
}

TEST_CASE("tilde norm only needs finitely many blocks") {
  const auto f = random_poly_2d(10, 6, CoefficientLaw::kGaussian);
  BesovParams p(YoungFunction::power(2.0), Weight::constant(1.0));
  const auto n = besov_norm_tilde(f, p);
  CHECK(n.last_level == last_dyadic_level(10));
  double sum = n.lphi;
  for (double t : n.terms) sum += t;
  CHECK(n.value == doctest::Approx(sum).epsilon(1e-12));
}

TEST_CASE("display norm for p = q = 2, s = 0 is Parseval-like") {
  TrigPoly f(2);
  f.set(0, 0, {1.0, 0.0});
  // g_0 and g_1 both equal 1 at (0, 0); every higher block vanishes there.
  CHECK(besov_tilde_display(f, 2.0, 2.0, 0.0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("bump multiplier") {
  CHECK(MultiplierFamily::eta1(0.0) == doctest::Approx(1.0));
  CHECK(MultiplierFamily::eta1(1.0) == 0.0);
  CHECK(MultiplierFamily::eta1(-1.5) == 0.0);
  CHECK(MultiplierFamily::phi_hat(0, 0, 4.0) == doctest::Approx(1.0));
}

TEST_CASE("best approximation: exact projection error for t^2") {
  const auto f = random_poly_2d(6, 1, CoefficientLaw::kGaussian);
  const auto e = best_approx_E(f, 2.0, YoungFunction::power(2.0));
  REQUIRE(e.exact_l2.has_value());
  CHECK(*e.exact_l2 <= e.upper * (1.0 + 1e-12));
}

TEST_CASE("integral and dyadic forms sandwich") {
  const auto f = random_poly_2d(3, 12, CoefficientLaw::kGaussian);
  BesovParams p(YoungFunction::power(2.0), Weight::power(0.5));
  p.n_max = 12;
  const auto rep = verify_lemma1(f, p);
  CHECK(rep.pass);
}

TEST_CASE("block norms are dominated by the best-approximation error") {
  const auto f = random_poly_2d(6, 3, CoefficientLaw::kGaussian);
  BesovParams p(YoungFunction::power(1.5), Weight::constant(1.0));
  p.n_max = 6;
  const auto rep = verify_comparison(f, p);
  CHECK(rep.details.at("levels").size() == 4u);
  CHECK(rep.pass);
}

TEST_CASE("last dyadic level") {
  CHECK(last_dyadic_level(1) == 3);
  CHECK(last_dyadic_level(2) == 3);
  CHECK(last_dyadic_level(3) == 4);
  CHECK(last_dyadic_level(32) == 7);
  for (int deg : {1, 5, 16, 33}) {
    TrigPoly f(2);
    f.set(deg, 0, {1.0, 0.0});
    CHECK(dyadic_block(last_dyadic_level(deg) + 1, f).empty());
  }
}
