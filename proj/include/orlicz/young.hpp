#pragma once

// Young functions as immutable values. Each kind carries closed forms where
// they exist and falls back to monotone root finding elsewhere. All kinds also
// expose the inverse in logarithmic coordinates, which the integral condition
// checks need for arguments far outside double range.

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace orlicz {

enum class YoungKind { kPower, kLogPower, kSection7, kTabulated };

std::string_view kind_name(YoungKind kind);

// Constants of the explicit three-branch example.
struct Section7Constants {
  double alpha;
  double r;      // e^{2e^2}
  double log_r;  // 2e^2
  double p;
  double q;
};

class YoungFunction {
 public:
  // t^p, p > 1.
  static YoungFunction power(double p);
  // t^{p0} / |ln t|^gamma on (0, 1/2], continued affinely (value and slope
  // matched at 1/2) beyond.
  static YoungFunction logpower(double p0, double gamma);
  // Inverse given piecewise with r = e^{2e^2}; requires 0 < alpha < e^{-2}.
  static YoungFunction section7(double alpha);
  // Piecewise linear through (0, 0) and the given breakpoints (t_i, Phi_i),
  // continued with the last slope. Breakpoints must be strictly increasing
  // with nondecreasing slopes.
  static YoungFunction tabulated(std::vector<std::pair<double, double>> breakpoints);

  YoungKind kind() const { return kind_; }
  std::string describe() const;

  double operator()(double t) const { return value(t); }
  double value(double t) const;
  double inverse(double u) const;
  // ln Phi^{-1}(e^w), exact in log space for every closed-form branch.
  double log_inverse(double w) const;

  // Sum of Phi(scale * a_i) for nonnegative a_i; dispatches on kind once.
  double modular_sum(std::span<const double> a, double scale) const;

  // Parameters: power {p}; logpower {p0, gamma}; section7 {alpha}.
  const std::vector<double>& params() const { return params_; }
  const std::vector<std::pair<double, double>>& breakpoints() const { return table_; }
  const Section7Constants& section7_constants() const;

  // Closed-form boundary between the analytic and affine parts of LogPower.
  static constexpr double kLogPowerSwitch = 0.5;

 private:
  YoungFunction() = default;

  double logpower_core(double t) const;
  double logpower_inverse_core(double u) const;
  double section7_inverse(double u) const;
  double section7_value(double t) const;
  double tabulated_value(double t) const;
  double tabulated_inverse(double u) const;

  YoungKind kind_{YoungKind::kPower};
  std::vector<double> params_;
  std::vector<std::pair<double, double>> table_;
  Section7Constants s7_{};
  // LogPower affine continuation: value and slope at the switch point.
  double switch_value_ = 0.0;
  double switch_slope_ = 0.0;
  // Section7 values of Phi^{-1} at 1/r and r (bounds of the affine part of Phi).
  double s7_inv_lo_ = 0.0;
  double s7_inv_hi_ = 0.0;
};

// Worst-case outcome of a structural condition over a finite test set.
// Margins are relative; pass holds iff worst_margin >= -tolerance.
struct ConditionReport {
  std::string condition;
  double grid_lo = 0.0;
  double grid_hi = 0.0;
  std::size_t grid_size = 0;
  double worst_margin = 0.0;
  std::vector<double> witness;  // grid point or (a, b) pair attaining the worst margin
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

std::vector<double> log_grid(double lo, double hi, std::size_t n);

// Midpoint concavity of x -> Phi(sqrt x) over adjacent grid pairs.
ConditionReport check_sqrt_concavity(const YoungFunction& phi, std::span<const double> grid,
                                     double tolerance = 1e-12);

// Convexity of u -> Phi^{-1}(u)^2 (equivalent to the concavity above). For the
// explicit example the closed-form second derivative is evaluated at each grid
// point; other kinds use second divided differences.
ConditionReport check_inverse_sq_convexity(const YoungFunction& phi,
                                           std::span<const double> grid,
                                           double tolerance = 1e-12);

// Slopes of Phi^{-1} on both sides of the two branch junctions of the explicit
// example; reports whether (Phi^{-1})^2 keeps a convex kink there.
ConditionReport section7_junction_kinks(const YoungFunction& phi);

// Pairs (a, b) with 0 < a < 1 <= ab < b on a log lattice.
std::vector<std::pair<double, double>> supermultiplicativity_pairs(double a_min, double ab_max,
                                                                   std::size_t per_axis);

ConditionReport check_supermultiplicativity(const YoungFunction& phi, double C,
                                            std::span<const std::pair<double, double>> pairs,
                                            double tolerance = 1e-12);

ConditionReport check_inverse_product(const YoungFunction& phi, double C,
                                      std::span<const double> grid, double tolerance = 1e-12);

// Relative slope increments of Phi over a grid; negative values mean a
// convexity violation.
ConditionReport check_convexity(const YoungFunction& phi, std::span<const double> grid,
                                double tolerance = 1e-12);

// max |Phi(Phi^{-1}(u)) / u - 1| over the grid, reported as a negative margin.
ConditionReport check_round_trip(const YoungFunction& phi, std::span<const double> grid,
                                 double tolerance = 1e-9);

}  // namespace orlicz
