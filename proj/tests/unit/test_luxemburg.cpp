#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "orlicz/grid.hpp"
#include "orlicz/luxemburg.hpp"
#include "orlicz/sampling.hpp"

using namespace orlicz;

namespace {

double lp(const std::vector<double>& x, double p) {
  double s = 0.0;
  for (double v : x) s += std::pow(std::abs(v), p);
  return std::pow(s, 1.0 / p);
}

}  // namespace

TEST_CASE("sequence norms equal l_p norms for power functions") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> len(1, 64);
  std::normal_distribution<double> g(0.0, 3.0);
  for (double p : {1.5, 2.0, 3.0}) {
    const auto phi = YoungFunction::power(p);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<double> x(static_cast<std::size_t>(len(rng)));
      for (auto& v : x) v = g(rng);
      CAPTURE(p);
      CHECK(norm_seq(phi, x) == doctest::Approx(lp(x, p)).epsilon(1e-9));
    }
  }
}

TEST_CASE("degenerate sequences") {
  const auto phi = YoungFunction::power(2.0);
  CHECK(norm_seq(phi, std::vector<double>{}) == 0.0);
  CHECK(norm_seq(phi, std::vector<double>{0.0, 0.0}) == 0.0);
  CHECK(norm_seq(phi, std::vector<double>{-4.0}) == doctest::Approx(4.0));
}

TEST_CASE("unit modular at the norm") {
  const auto phi = YoungFunction::section7(0.05);
  const std::vector<double> x{0.3, 2.0, 7.5, 1e-3};
  const double n = norm_seq(phi, x);
  CHECK(modular(phi, x, n) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("triangle inequality and homogeneity") {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  for (const auto& phi : {YoungFunction::logpower(1.0, 1.5), YoungFunction::section7(0.05),
                          YoungFunction::power(1.5)}) {
    for (int t = 0; t < 20; ++t) {
      std::vector<double> x(20), y(20), s(20), c(20);
      for (std::size_t i = 0; i < 20; ++i) {
        x[i] = g(rng);
        y[i] = g(rng);
        s[i] = x[i] + y[i];
        c[i] = -2.5 * x[i];
      }
      CHECK(norm_seq(phi, s) <= (norm_seq(phi, x) + norm_seq(phi, y)) * (1.0 + 1e-12));
      CHECK(norm_seq(phi, c) == doctest::Approx(2.5 * norm_seq(phi, x)).epsilon(1e-10));
    }
  }
}

TEST_CASE("sampled function norms use the normalized measure") {
  const auto phi = YoungFunction::power(3.0);
  const std::vector<double> f{1.0, 2.0, 3.0, 4.0};
  const double ref = std::pow((1.0 + 8.0 + 27.0 + 64.0) / 4.0, 1.0 / 3.0);
  CHECK(norm_fun(phi, f) == doctest::Approx(ref).epsilon(1e-12));
  const std::vector<std::complex<double>> z{{3.0, 4.0}, {0.0, 5.0}};
  CHECK(norm_fun(phi, z) == doctest::Approx(5.0).epsilon(1e-12));
}

TEST_CASE("polynomial norms: Parseval and quadrature agree for t^2") {
  const auto phi = YoungFunction::power(2.0);
  const auto f = random_poly_2d(6, 3, CoefficientLaw::kGaussian);
  PolyNormOptions fast;
  PolyNormOptions slow;
  slow.parseval_fast_path = false;
  const double a = norm_poly(phi, f, fast).value;
  const double b = norm_poly(phi, f, slow).value;
  CHECK(a == doctest::Approx(f.l2_norm()).epsilon(1e-14));
  CHECK(b == doctest::Approx(a).epsilon(1e-10));
}

TEST_CASE("polynomial norm of a monomial is the constant modulus") {
  TrigPoly f(2);
  f.set(3, -2, {0.6, 0.8});
  for (const auto& phi : {YoungFunction::power(1.5), YoungFunction::section7(0.05)}) {
    CHECK(norm_poly(phi, f).value == doctest::Approx(1.0 / phi.inverse(1.0)).epsilon(1e-10));
  }
}

TEST_CASE("direct and FFT evaluation give the same norm") {
  const auto phi = YoungFunction::power(3.0);
  const auto f = random_poly_2d(5, 8, CoefficientLaw::kUnimodular);
  PolyNormOptions d, t;
  d.method = EvalMethod::kDirect;
  t.method = EvalMethod::kFft;
  CHECK(norm_poly(phi, f, d).value == doctest::Approx(norm_poly(phi, f, t).value).epsilon(1e-12));
}

TEST_CASE("l2 embedding of l_Phi") {
  const std::vector<double> x{0.1, -0.4, 2.0, 0.03};
  CHECK(embed_l2_check(YoungFunction::power(1.5), x).pass);
  CHECK(embed_l2_check(YoungFunction::logpower(1.0, 1.5), x).pass);
}
