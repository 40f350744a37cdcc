#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "orlicz/weight.hpp"
#include "orlicz/young.hpp"

using namespace orlicz;

namespace {

std::vector<YoungFunction> all_kinds() {
  return {YoungFunction::power(1.5), YoungFunction::power(2.0), YoungFunction::power(3.0),
          YoungFunction::logpower(1.0, 1.5), YoungFunction::logpower(1.2, 1.2),
          YoungFunction::section7(0.05),
          YoungFunction::tabulated({{1.0, 1.0}, {2.0, 3.0}, {4.0, 10.0}})};
}

}  // namespace

TEST_CASE("power closed forms") {
  const auto phi = YoungFunction::power(3.0);
  CHECK(phi(2.0) == doctest::Approx(8.0));
  CHECK(phi.inverse(27.0) == doctest::Approx(3.0));
  CHECK(phi(0.0) == 0.0);
  CHECK(phi.log_inverse(std::log(8.0)) == doctest::Approx(std::log(2.0)));
}

TEST_CASE("round trip Phi(Phi^{-1}(u)) = u for every kind") {
  const auto grid = log_grid(1e-8, 1e8, 161);
  for (const auto& phi : all_kinds()) {
    CAPTURE(phi.describe());
    const auto rep = check_round_trip(phi, grid);
    CHECK(rep.pass);
  }
}

TEST_CASE("every kind is convex on a wide grid") {
  const auto grid = log_grid(1e-6, 1e6, 241);
  for (const auto& phi : all_kinds()) {
    CAPTURE(phi.describe());
    CHECK(check_convexity(phi, grid).pass);
  }
}

TEST_CASE("log_inverse matches the direct inverse") {
  for (const auto& phi : all_kinds()) {
    CAPTURE(phi.describe());
    for (double w : {-30.0, -5.0, -0.3, 0.0, 0.7, 4.0, 25.0}) {
      CAPTURE(w);
      const double direct = std::log(phi.inverse(std::exp(w)));
      CHECK(phi.log_inverse(w) == doctest::Approx(direct).epsilon(1e-9));
    }
  }
}

TEST_CASE("log_inverse stays finite far outside double range") {
  for (const auto& phi : all_kinds()) {
    CAPTURE(phi.describe());
    CHECK(std::isfinite(phi.log_inverse(5e4)));
    CHECK(std::isfinite(phi.log_inverse(-5e4)));
    CHECK(phi.log_inverse(5e4) > phi.log_inverse(4e4));
  }
}

TEST_CASE("logpower is continuous with matched slope at the switch") {
  const auto phi = YoungFunction::logpower(1.0, 1.5);
  const double t = YoungFunction::kLogPowerSwitch;
  const double h = 1e-7;
  CHECK(phi(t - h) == doctest::Approx(phi(t + h)).epsilon(1e-6));
  const double left = (phi(t) - phi(t - h)) / h;
  const double right = (phi(t + h) - phi(t)) / h;
  CHECK(left == doctest::Approx(right).epsilon(1e-5));
  // Below the switch the closed form t / |ln t|^gamma applies.
  CHECK(phi(0.01) == doctest::Approx(0.01 / std::pow(std::log(100.0), 1.5)));
}

TEST_CASE("explicit example constants") {
  const auto phi = YoungFunction::section7(0.05);
  const auto& c = phi.section7_constants();
  const double e2 = std::exp(2.0);
  CHECK(c.log_r == doctest::Approx(2.0 * e2));
  CHECK(c.p == doctest::Approx(std::exp(-0.05 * e2 / 2.0)).epsilon(1e-12));
  CHECK(c.p == doctest::Approx(0.8313).epsilon(1e-4));
  CHECK(c.q > 0.0);
  CHECK_THROWS_AS(YoungFunction::section7(0.2), std::invalid_argument);
  CHECK_THROWS_AS(YoungFunction::power(1.0), std::invalid_argument);
}

TEST_CASE("tabulated validation") {
  CHECK_THROWS(YoungFunction::tabulated({{1.0, 3.0}, {2.0, 4.0}}));  // slope drops
  CHECK_THROWS(YoungFunction::tabulated({{2.0, 1.0}, {1.0, 2.0}}));
  const auto phi = YoungFunction::tabulated({{1.0, 1.0}, {2.0, 3.0}});
  CHECK(phi(0.5) == doctest::Approx(0.5));
  CHECK(phi(3.0) == doctest::Approx(5.0));  // last slope continued
  CHECK(phi.inverse(2.0) == doctest::Approx(1.5));
}

TEST_CASE("modular_sum agrees with elementwise evaluation") {
  const std::vector<double> a{0.0, 0.1, 0.5, 1.0, 3.0, 17.0};
  for (const auto& phi : all_kinds()) {
    CAPTURE(phi.describe());
    double ref = 0.0;
    for (double x : a) ref += phi(0.37 * x);
    CHECK(phi.modular_sum(a, 0.37) == doctest::Approx(ref).epsilon(1e-12));
  }
}

TEST_CASE("structural conditions of the explicit example") {
  const auto phi = YoungFunction::section7(0.05);
  const double C = phi.section7_constants().r;
  const auto grid = log_grid(1e-8, 1e8, 161);
  CHECK(check_inverse_sq_convexity(phi, grid).pass);
  CHECK(check_sqrt_concavity(YoungFunction::power(1.5), grid).pass);
  CHECK_FALSE(check_sqrt_concavity(YoungFunction::power(3.0), grid).pass);
  const auto pairs = supermultiplicativity_pairs(1e-9, 1e12, 48);
  CHECK(check_supermultiplicativity(phi, C, pairs).pass);
  CHECK(check_inverse_product(phi, C, log_grid(1e-12, 1e12, 241)).pass);
}

TEST_CASE("weights") {
  const auto phi = YoungFunction::power(2.0);
  const auto w = Weight::phi_inverse_sq(phi);
  // sqrt(t^2) / t = 1
  CHECK(w(5.0) == doctest::Approx(1.0));
  CHECK(Weight::power(0.5)(4.0) == doctest::Approx(2.0));
  CHECK(Weight::constant(3.0).scaled(2.0)(10.0) == doctest::Approx(6.0));
  CHECK(std::isinf(Weight::zero().log_value(1.0)));
  CHECK(Weight::power(0.5).log_value(2.0) == doctest::Approx(1.0));
}
