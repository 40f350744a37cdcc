#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "orlicz/besov.hpp"
#include "orlicz/luxemburg.hpp"
#include "orlicz/sampling.hpp"

using namespace orlicz;

TEST_CASE("random polynomials are seed-deterministic") {
  const auto a = random_poly_on_frame(4, 77, CoefficientLaw::kGaussian);
  const auto b = random_poly_on_frame(4, 77, CoefficientLaw::kGaussian);
  const auto c = random_poly_on_frame(4, 78, CoefficientLaw::kGaussian);
  CHECK(a.coefficients() == b.coefficients());
  CHECK(a.coefficients() != c.coefficients());
  CHECK(random_poly_1d(9, 3, CoefficientLaw::kUnimodular).coefficients() ==
        random_poly_1d(9, 3, CoefficientLaw::kUnimodular).coefficients());
}

TEST_CASE("random frame polynomials live on the frame") {
  const auto fr = frame(5);
  const auto f = random_poly_on_frame(5, 1, CoefficientLaw::kUnimodular);
  CHECK(f.support_size() == fr.omega());
  for (const auto& [idx, c] : f.coefficients()) {
    CHECK(fr.contains(idx.first, idx.second));
    CHECK(std::abs(c) == doctest::Approx(1.0).epsilon(1e-15));
  }
  const auto sparse = random_poly_on_frame(5, 1, CoefficientLaw::kGaussian, 0.25);
  CHECK(sparse.support_size() < fr.omega());
  CHECK(sparse.support_size() > fr.omega() / 8);
}

TEST_CASE("gaussian coefficients have unit mean square") {
  const auto fr = frame(4);
  double mean = 0.0;
  const int trials = 40;
  for (int i = 0; i < trials; ++i) {
    const auto f = random_poly_on_frame(4, batch_seed(5, i), CoefficientLaw::kGaussian);
    mean += f.l2_norm() * f.l2_norm();
  }
  mean /= trials;
  CHECK(mean == doctest::Approx(static_cast<double>(fr.omega())).epsilon(0.1));
}

TEST_CASE("batch seeds are distinct") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(batch_seed(42, i));
  CHECK(seen.size() == 1000u);
  CHECK(batch_seed(42, 3) == batch_seed(42, 3));
}

TEST_CASE("coefficient law names") {
  CHECK(coefficient_law_from_string("gaussian") == CoefficientLaw::kGaussian);
  CHECK(to_string(CoefficientLaw::kUnimodular) == "unimodular");
  CHECK_THROWS(coefficient_law_from_string("cauchy"));
}

TEST_CASE("classical sampling inequality on random 1-D polynomials") {
  for (const auto& phi : {YoungFunction::power(1.5), YoungFunction::power(2.0),
                          YoungFunction::section7(0.05)}) {
    for (int i = 0; i < 10; ++i) {
      const auto g = random_poly_1d(1 + 6 * i, batch_seed(9, i), CoefficientLaw::kGaussian);
      const auto c = classical_check_1d(g, phi);
      CAPTURE(phi.describe());
      CHECK(c.pass);
      CHECK(c.recompute_pass());
    }
  }
}

TEST_CASE("integral modular: Parseval for t^2 and a constant modulus otherwise") {
  const auto g = random_poly_1d(5, 2, CoefficientLaw::kGaussian);
  CHECK(integral_modular(YoungFunction::power(2.0), g) ==
        doctest::Approx(g.l2_norm() * g.l2_norm()).epsilon(1e-12));
  TrigPoly m(1);
  m.set(4, 0, {0.0, 2.0});
  CHECK(integral_modular(YoungFunction::power(3.0), m) == doctest::Approx(8.0).epsilon(1e-12));
}

TEST_CASE("preconditions of the sampling theorem") {
  const auto phi = YoungFunction::section7(0.05);
  CHECK(theorem5_preconditions(phi, phi.section7_constants().r).ok());
  CHECK(theorem5_preconditions(YoungFunction::power(2.0), 1.0).ok());
}

TEST_CASE("extremal candidate has the closed-form ratio") {
  const auto phi = YoungFunction::section7(0.05);
  const double C = phi.section7_constants().r;
  for (int n : {3, 4}) {
    const auto c = orlicz_sampling_check(extremal_candidate(n), n, phi, C);
    CHECK(c.normalized_ratio == doctest::Approx(extremal_normalized_ratio(phi, n)).epsilon(1e-9));
    CHECK(c.pass);
  }
  // For t^p every harmonic is extremal with normalized ratio 1.
  const auto c = orlicz_sampling_check(extremal_candidate(4), 4, YoungFunction::power(2.0), 1.0);
  CHECK(c.normalized_ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("support violations are rejected") {
  TrigPoly f(2);
  f.set(0, 0, {1.0, 0.0});
  CHECK_THROWS_AS(orlicz_sampling_check(f, 3, YoungFunction::power(2.0), 1.0), std::invalid_argument);
}

TEST_CASE("batch: extremal first, trials in seed order, zero violations") {
  const auto phi = YoungFunction::power(1.5);
  const auto batch = theorem5_batch(3, 5, 123, phi, 1.0);
  REQUIRE(batch.checks.size() == 6u);
  CHECK(batch.checks[1].id == batch_seed(123, 0));
  CHECK(batch.violations == 0u);
  double mx = 0.0;
  for (const auto& c : batch.checks) mx = std::max(mx, c.normalized_ratio);
  CHECK(batch.max_normalized_ratio == mx);
  const auto again = theorem5_batch(3, 5, 123, phi, 1.0);
  for (std::size_t i = 0; i < batch.checks.size(); ++i) {
    CHECK(batch.checks[i].csv_row() == again.checks[i].csv_row());
  }
}

TEST_CASE("l2 sampling lower bound on frames") {
  for (int i = 0; i < 5; ++i) {
    const auto f = random_poly_2d(20, batch_seed(2, i), CoefficientLaw::kGaussian);
    for (int n = 3; n <= last_dyadic_level(f.degree()); ++n) {
      CHECK(l2_sampling_lower(f, n).pass);
    }
  }
}

TEST_CASE("summing chain on small polynomials") {
  const auto phi = YoungFunction::power(1.5);
  const auto f = random_poly_2d(8, 4, CoefficientLaw::kGaussian);
  const auto rep = theorem8_chain(f, phi, Weight::phi_inverse_sq(phi), 1.0);
  CHECK(rep.pass);
  CHECK(rep.lhs > 0.0);
  CHECK(rep.details.contains("sampled_l2_sum"));
  CHECK(rep.details.contains("sampled_lphi_sum"));
}

TEST_CASE("csv rows have one field per header column") {
  const auto c = classical_check_1d(random_poly_1d(3, 1, CoefficientLaw::kGaussian),
                                    YoungFunction::power(2.0));
  auto commas = [](const std::string& s) { return std::count(s.begin(), s.end(), ','); };
  CHECK(commas(c.csv_row()) == commas(SamplingCheck::csv_header()));
  CHECK(c.to_json().at("check") == c.check);
}
