#include "diskpoisson/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>

namespace diskpoisson {
namespace {

// Legendre P_n and its derivative at x by the three-term recurrence.
std::pair<double, double> legendre(std::size_t n, double x) {
  double p0 = 1.0, p1 = x;
  if (n == 0) return {1.0, 0.0};
  for (std::size_t k = 2; k <= n; ++k) {
    const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
    p0 = p1;
    p1 = pk;
  }
  const double dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

GaussRule compute_rule(std::size_t n) {
  // Golub-Welsch: eigenvalues of the symmetric Jacobi matrix are the nodes.
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t k = 1; k < n; ++k) {
    const double beta = k / std::sqrt(4.0 * k * k - 1.0);
    jacobi(k, k - 1) = beta;
    jacobi(k - 1, k) = beta;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi, Eigen::EigenvaluesOnly);
  GaussRule rule{solver.eigenvalues(), Eigen::VectorXd(static_cast<Eigen::Index>(n))};

  // One Newton polish per node, then the classical weight formula.
  for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
    double x = rule.nodes(i);
    for (int it = 0; it < 2; ++it) {
      const auto [p, dp] = legendre(n, x);
      x -= p / dp;
    }
    const auto [p, dp] = legendre(n, x);
    (void)p;
    rule.nodes(i) = x;
    rule.weights(i) = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gauss_legendre: n must be positive");
  static std::mutex mutex;
  static std::map<std::size_t, std::unique_ptr<GaussRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    if (n == 1) {
      slot = std::make_unique<GaussRule>(GaussRule{Eigen::VectorXd::Zero(1), Eigen::VectorXd::Constant(1, 2.0)});
    } else {
      slot = std::make_unique<GaussRule>(compute_rule(n));
    }
  }
  return *slot;
}

GaussRule gauss_legendre(std::size_t n, double a, double b) {
  const GaussRule& ref = gauss_legendre(n);
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  return {(half * ref.nodes.array() + mid).matrix(), half * ref.weights};
}

GaussRule squared_gauss_legendre(std::size_t n) {
  const GaussRule unit = gauss_legendre(n, 0.0, 1.0);
  return {unit.nodes.array().square().matrix(), (2.0 * unit.nodes.array() * unit.weights.array()).matrix()};
}

AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double a, double b, double tolerance,
                                  std::size_t max_panels) {
  struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& other) const { return error < other.error; }
  };
  const GaussRule& rule = gauss_legendre(10);
  auto gauss = [&](double lo, double hi) {
    const double half = 0.5 * (hi - lo), mid = 0.5 * (hi + lo);
    double s = 0.0;
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) s += rule.weights(i) * f(mid + half * rule.nodes(i));
    return half * s;
  };
  auto make_panel = [&](double lo, double hi) {
    const double whole = gauss(lo, hi);
    const double mid = 0.5 * (lo + hi);
    const double split = gauss(lo, mid) + gauss(mid, hi);
    return Panel{lo, hi, split, std::abs(split - whole)};
  };

  std::priority_queue<Panel> panels;
  panels.push(make_panel(a, b));
  double total = panels.top().value;
  double error = panels.top().error;
  while (panels.size() < max_panels) {
    if (error <= std::max(tolerance, tolerance * std::abs(total))) {
      return {total, error, true};
    }
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = make_panel(worst.a, mid);
    const Panel right = make_panel(mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }
  return {total, error, error <= std::max(tolerance, tolerance * std::abs(total))};
}

}  // namespace diskpoisson
