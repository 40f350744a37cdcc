#include "orlicz/weight.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace orlicz {

Weight Weight::constant(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("constant weight must be positive");
  Weight w;
  w.kind_ = Kind::kConstant;
  w.factor_ = c;
  return w;
}

Weight Weight::power(double theta) {
  if (!(theta >= 0.0)) throw std::invalid_argument("power weight needs theta >= 0");
  Weight w;
  w.kind_ = Kind::kPower;
  w.theta_ = theta;
  return w;
}

Weight Weight::phi_inverse_sq(const YoungFunction& phi) {
  Weight w;
  w.kind_ = Kind::kPhiInverseSq;
  w.phi_ = std::make_shared<const YoungFunction>(phi);
  return w;
}

Weight Weight::zero() {
  Weight w;
  w.kind_ = Kind::kZero;
  w.factor_ = 0.0;
  return w;
}

Weight Weight::scaled(double factor) const {
  if (!(factor > 0.0)) throw std::invalid_argument("weight scale must be positive");
  Weight w = *this;
  w.factor_ *= factor;
  return w;
}

double Weight::operator()(double t) const {
  switch (kind_) {
    case Kind::kZero:
      return 0.0;
    case Kind::kConstant:
      return factor_;
    case Kind::kPower:
      return factor_ * std::pow(t, theta_);
    case Kind::kPhiInverseSq:
      return factor_ * std::exp(log_value(std::log(t)) - std::log(factor_));
  }
  return 0.0;
}

double Weight::log_value(double u) const {
  switch (kind_) {
    case Kind::kZero:
      return -std::numeric_limits<double>::infinity();
    case Kind::kConstant:
      return std::log(factor_);
    case Kind::kPower:
      return std::log(factor_) + theta_ * u;
    case Kind::kPhiInverseSq:
      return std::log(factor_) + phi_->log_inverse(2.0 * u) - u;
  }
  return 0.0;
}

std::string Weight::describe() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind_) {
    case Kind::kZero:
      return "zero";
    case Kind::kConstant:
      os << "constant(" << factor_ << ")";
      break;
    case Kind::kPower:
      os << factor_ << "*t^" << theta_;
      break;
    case Kind::kPhiInverseSq:
      os << factor_ << "*Phi^-1(t^2)/t [" << phi_->describe() << "]";
      break;
  }
  return os.str();
}

}  // namespace orlicz
