#include "diskpoisson/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "diskpoisson/errors.hpp"
#include "diskpoisson/quadrature.hpp"

namespace diskpoisson {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_radius_arg(const MappingHandle& m, double r, const char* what) {
  const bool closed = m.boundary_regular();
  if (!(r > 0.0) || r > 1.0 || (r == 1.0 && !closed)) {
    std::ostringstream msg;
    msg << what << ": radius " << r << " is outside " << (closed ? "(0, 1]" : "(0, 1)");
    throw DomainError(msg.str());
  }
}

// Lagrange interpolant through three points, evaluated at x.
double quadratic_at(const double* xs, const double* ys, double x) {
  double total = 0.0;
  for (int i = 0; i < 3; ++i) {
    double term = ys[i];
    for (int j = 0; j < 3; ++j) {
      if (j != i) term *= (x - xs[j]) / (xs[i] - xs[j]);
    }
    total += term;
  }
  return total;
}

}  // namespace

double perimeter(const MappingHandle& m, double r, std::size_t nodes) {
  check_radius_arg(m, r, "perimeter");
  if (nodes == 0) throw std::invalid_argument("perimeter: need at least one node");
  const double mean = periodic_mean<double>(
      [&](double t) {
        const WirtingerJet j = m.jet(std::polar(r, t));
        return std::abs(j.f_z - std::polar(1.0, -2.0 * t) * j.f_zbar);
      },
      nodes);
  return r * kTwoPi * mean;
}

std::vector<double> default_radius_grid(std::size_t levels) {
  std::vector<double> radii(levels);
  for (std::size_t k = 0; k < levels; ++k) radii[k] = 1.0 - std::ldexp(1.0, -static_cast<int>(k + 1));
  return radii;
}

LengthProfile perimeter_sup(const MappingHandle& m, std::span<const double> r_grid, std::size_t nodes) {
  LengthProfile profile;
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    const double r = r_grid[i];
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("perimeter_sup: radii must lie in (0, 1)");
    if (i > 0 && !(r > r_grid[i - 1])) throw std::invalid_argument("perimeter_sup: radii must increase");
    if (r > m.max_radius()) continue;
    profile.radii.push_back(r);
    profile.values.push_back(perimeter(m, r, nodes));
  }
  if (profile.values.empty()) throw std::invalid_argument("perimeter_sup: no admissible radius in the grid");

  const auto& v = profile.values;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] < v[i - 1] * (1.0 - 1e-12)) profile.monotone = false;
  }
  profile.increasing_at_end = v.size() >= 2 && v.back() > v[v.size() - 2] * (1.0 + 1e-9);

  if (m.boundary_regular()) {
    profile.limit = perimeter(m, 1.0, nodes);
  } else if (v.size() >= 3) {
    const std::size_t k = v.size() - 3;
    profile.limit = quadratic_at(&profile.radii[k], &v[k], 1.0);
  } else {
    profile.limit = v.back();
  }
  profile.sup_estimate = std::max(*std::max_element(v.begin(), v.end()), profile.limit);
  return profile;
}

LengthProfile perimeter_sup(const MappingHandle& m) {
  const auto grid = default_radius_grid();
  return perimeter_sup(m, grid);
}

double radial_length(const MappingHandle& m, const Angle& theta, double r, std::size_t nodes) {
  check_radius_arg(m, r, "radial_length");
  if (nodes == 0) throw std::invalid_argument("radial_length: need at least one node");
  const GaussRule rule = gauss_legendre(nodes, 0.0, r);
  const Complex unit = theta.unit();
  const Complex twist = std::conj(unit * unit);
  double total = 0.0;
  for (Eigen::Index j = 0; j < rule.nodes.size(); ++j) {
    const WirtingerJet jet = m.jet(rule.nodes(j) * unit);
    total += rule.weights(j) * std::abs(jet.f_z + twist * jet.f_zbar);
  }
  return total;
}

RadialLengthSup radial_length_sup(const MappingHandle& m, std::size_t angles, std::size_t nodes) {
  if (angles == 0) throw std::invalid_argument("radial_length_sup: need at least one angle");
  RadialLengthSup best;
  best.radius = m.max_radius();
  for (std::size_t k = 0; k < angles; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(angles);
    const double value = radial_length(m, Angle(t), best.radius, nodes);
    if (k == 0 || value > best.value) {
      best.value = value;
      best.theta = t;
    }
  }
  return best;
}

double image_area(const MappingHandle& m, double r, const PolarGrid& grid) {
  check_radius_arg(m, r, "image_area");
  if (grid.radial == 0 || grid.angular == 0) throw std::invalid_argument("image_area: empty grid");
  const GaussRule rule = gauss_legendre(grid.radial, 0.0, r);
  double total = 0.0;
  for (std::size_t k = 0; k < grid.angular; ++k) {
    const Complex unit = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(grid.angular));
    double ray = 0.0;
    for (Eigen::Index j = 0; j < rule.nodes.size(); ++j) {
      const Complex z = rule.nodes(j) * unit;
      const double jacobian = jet_norms(m.jet(z)).jacobian;
      if (!(jacobian > 0.0)) {
        std::ostringstream msg;
        msg << "mapping '" << m.label() << "' is not sense-preserving at z = " << z << " (J = " << jacobian << ")";
        throw SenseReversalError(msg.str());
      }
      ray += rule.weights(j) * rule.nodes(j) * jacobian;
    }
    total += ray;
  }
  return kTwoPi * total / static_cast<double>(grid.angular);
}

IsoperimetricResult isoperimetric_check(const MappingHandle& m, double tolerance) {
  IsoperimetricResult result;
  result.area = image_area(m, m.max_radius());
  result.perimeter = perimeter_sup(m).sup_estimate;
  result.bound = result.perimeter * result.perimeter / (2.0 * kTwoPi);
  result.holds = result.area <= result.bound * (1.0 + tolerance);
  return result;
}

QcEstimate qc_constant(const MappingHandle& m, const PolarGrid& grid) {
  if (grid.radial == 0 || grid.angular == 0) throw std::invalid_argument("qc_constant: empty grid");
  QcEstimate estimate;
  std::vector<std::pair<Complex, JetNorms>> samples;
  samples.reserve((grid.radial + 1) * grid.angular);
  for (std::size_t i = 0; i <= grid.radial; ++i) {
    const double rho = m.max_radius() * static_cast<double>(i) / static_cast<double>(grid.radial);
    const std::size_t count = i == 0 ? 1 : grid.angular;
    for (std::size_t k = 0; k < count; ++k) {
      const Complex z = std::polar(rho, kTwoPi * static_cast<double>(k) / static_cast<double>(grid.angular));
      const JetNorms n = jet_norms(m.jet(z));
      if (n.min_stretch < 1e-12) {
        std::ostringstream msg;
        msg << "mapping '" << m.label() << "' degenerates at z = " << z << " (lambda = " << n.min_stretch << ")";
        throw DegenerateError(msg.str());
      }
      samples.emplace_back(z, n);
      const double ratio = n.op_norm / n.min_stretch;
      if (ratio > estimate.value) {
        estimate.value = ratio;
        estimate.argmax = z;
      }
    }
  }
  for (const auto& [z, n] : samples) {
    if (n.op_norm * n.op_norm > estimate.value * std::abs(n.jacobian) * (1.0 + 1e-12)) {
      estimate.squared_form_holds = false;
    }
  }
  return estimate;
}

}  // namespace diskpoisson
