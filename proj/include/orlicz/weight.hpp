#pragma once

// Nondecreasing weights Psi on [1, inf) used by the Besov-Orlicz norms and the
// integral embedding condition.

#include <memory>
#include <string>

#include "orlicz/young.hpp"

namespace orlicz {

class Weight {
 public:
  enum class Kind { kConstant, kPower, kPhiInverseSq, kZero };

  static Weight constant(double c);
  static Weight power(double theta);  // t^theta
  // Phi^{-1}(t^2) / t, the weight that turns the Sobolev condition into the
  // Orlicz summing condition.
  static Weight phi_inverse_sq(const YoungFunction& phi);
  static Weight zero();

  Weight scaled(double factor) const;

  Kind kind() const { return kind_; }
  double factor() const { return factor_; }
  double theta() const { return theta_; }
  const YoungFunction* phi() const { return phi_.get(); }

  double operator()(double t) const;
  // ln Psi(e^u); -inf for the zero weight.
  double log_value(double u) const;
  std::string describe() const;

 private:
  Weight() = default;
  Kind kind_ = Kind::kConstant;
  double factor_ = 1.0;
  double theta_ = 0.0;
  std::shared_ptr<const YoungFunction> phi_;
};

}  // namespace orlicz
