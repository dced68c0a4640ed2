#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>

namespace diskpoisson {

/// A majorant omega: continuous, nondecreasing, omega(0) = 0, omega(t)/t nonincreasing.
class Majorant {
 public:
  using Function = std::function<double(double)>;

  Majorant(std::string label, Function fn, std::optional<double> alpha = std::nullopt);

  /// omega_alpha(t) = t^alpha, 0 < alpha <= 1.
  static Majorant power(double alpha);
  /// omega(t) = t.
  static Majorant linear() { return power(1.0); }

  double operator()(double t) const { return fn_(t); }
  const std::string& label() const { return label_; }
  std::optional<double> alpha() const { return alpha_; }

 private:
  std::string label_;
  Function fn_;
  std::optional<double> alpha_;
};

struct AxiomCheck {
  bool passed = true;
  /// Index into the grid of the first pair (i, i+1) that breaks an axiom.
  std::optional<std::size_t> first_violation;
  std::string reason;
};

/// Checks omega(0) = 0, monotonicity of omega, and antitonicity of omega(t)/t
/// pairwise on a strictly increasing positive grid.
AxiomCheck check_majorant_axioms(const Majorant& omega, std::span<const double> grid);

struct RegularityCondition {
  /// Least C over the delta grid.
  double constant_estimate = 0.0;
  bool holds = false;
  /// The improper integral failed its tail test.
  bool divergent = false;
};

/// Empirical constants of the two regularity conditions
///   int_0^delta omega(t)/t dt           <= C omega(delta)
///   delta int_delta^inf omega(t)/t^2 dt <= C omega(delta)
/// over a log-spaced grid of delta in (0, delta0).
struct RegularityReport {
  RegularityCondition small_scale;
  RegularityCondition large_scale;
  double delta0 = 1.0;
  std::size_t samples = 0;
};

struct RegularityOptions {
  std::size_t delta_samples = 64;
  /// The smallest delta is delta0 * 10^-decades.
  double decades = 6.0;
  /// Upper truncation of the second integral: T = truncation_factor * delta0.
  double truncation_factor = 1e6;
  /// Lower truncation of the first integral: t_min = lower_truncation * delta.
  double lower_truncation = 1e-12;
  /// Constants growing by more than this factor over the last decade of the
  /// delta grid are reported as unbounded.
  double growth_tolerance = 1.05;
  double quadrature_tolerance = 1e-12;
};

RegularityReport check_regularity(const Majorant& omega, double delta0 = 1.0, const RegularityOptions& options = {});

}  // namespace diskpoisson
