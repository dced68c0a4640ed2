#pragma once

#include <cstddef>
#include <functional>
#include <numbers>

#include <Eigen/Dense>

namespace diskpoisson {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// n-point Gauss-Legendre rule. Rules are computed once per n and cached.
const GaussRule& gauss_legendre(std::size_t n);

/// The rule transported to [a, b].
GaussRule gauss_legendre(std::size_t n, double a, double b);

/// Gauss-Legendre nodes/weights on [0, 1] in the squared variable: integrates
/// h over [0, 1] as sum_j weights(j) * h(nodes(j)) with nodes = t_j^2 and
/// weights = 2 t_j w_j. Clusters nodes at 0, which keeps integrands with a
/// rho*log(rho) endpoint behavior spectrally convergent.
GaussRule squared_gauss_legendre(std::size_t n);

/// Mean of a 2pi-periodic function by the n-point trapezoid rule:
/// (1/n) sum_k f(2 pi k / n).
template <typename Result, typename F>
Result periodic_mean(F&& f, std::size_t n) {
  Result sum{};
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) sum += f(step * static_cast<double>(k));
  return sum / static_cast<double>(n);
}

struct AdaptiveResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
};

/// Globally adaptive Gauss-Legendre quadrature of a real function on [a, b].
/// Each panel is estimated with a 10-point rule and with two 10-point half
/// rules; panels whose estimates disagree by more than their share of
/// `tolerance` (absolute, or relative to |value|) are bisected.
AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                  double tolerance = 1e-12, std::size_t max_panels = 4096);

}  // namespace diskpoisson
