#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "diskpoisson/analysis.hpp"
#include "diskpoisson/errors.hpp"
#include "diskpoisson/quadrature.hpp"

namespace diskpoisson {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Complex disk_point(double radius, double u_radial, double u_angle) {
  return std::polar(radius * std::sqrt(u_radial), kTwoPi * u_angle);
}

double distance(Complex z) { return 1.0 - std::abs(z); }

// int over the segment [a, b] of omega(d)/d ds.
double segment_curve_integral(const Majorant& omega, Complex a, Complex b) {
  const double length = std::abs(b - a);
  if (length == 0.0) return 0.0;
  const Complex step = (b - a) / length;
  auto integrand = [&](double s) {
    const double d = distance(a + s * step);
    return omega(d) / d;
  };
  return integrate_adaptive(integrand, 0.0, length, 1e-10).value;
}

// int_{d0}^{d1} omega(t)/t dt in the variable log t.
double radial_curve_integral(const Majorant& omega, double d0, double d1) {
  if (!(d1 > d0)) return 0.0;
  return integrate_adaptive([&](double u) { return omega(std::exp(u)); }, std::log(d0), std::log(d1), 1e-10).value;
}

// Moves z toward the origin by `length`, stopping at the origin.
Complex pulled_inward(Complex z, double length) {
  const double modulus = std::abs(z);
  if (modulus <= length) return 0.0;
  return z * ((modulus - length) / modulus);
}

}  // namespace

double absolute_tolerance(const MappingHandle& m, const Tolerances& tol) {
  return m.solver_backed() ? tol.solver_backed : tol.closed_form;
}

VerificationReport make_report(std::string theorem_id, std::string map, double lhs, double rhs, double tolerance,
                               double sharpness_tolerance, NumericRecord inputs, NumericRecord constants,
                               TextRecord labels) {
  VerificationReport report;
  report.theorem_id = std::move(theorem_id);
  report.map = std::move(map);
  report.lhs = lhs;
  report.rhs = rhs;
  report.margin = rhs - lhs;
  report.tolerance = tolerance;
  report.sharpness_tolerance = sharpness_tolerance;
  report.holds = report.margin >= -tolerance;
  report.sharp = std::abs(report.margin) < sharpness_tolerance;
  report.inputs = std::move(inputs);
  report.constants = std::move(constants);
  report.labels = std::move(labels);
  return report;
}

std::vector<double> disk_grid_radii(double max_radius, const DiskGrid& grid) {
  if (!(max_radius > 0.0 && max_radius <= 1.0)) throw std::invalid_argument("disk_grid: max_radius must lie in (0, 1]");
  std::vector<double> radii;
  for (std::size_t i = 1; i < grid.uniform_radii; ++i) {
    radii.push_back(max_radius * static_cast<double>(i) / static_cast<double>(grid.uniform_radii));
  }
  for (std::size_t k = 1; k <= grid.boundary_levels; ++k) {
    radii.push_back(max_radius * (1.0 - std::ldexp(1.0, -static_cast<int>(k))));
  }
  if (max_radius < 1.0) radii.push_back(max_radius);
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());
  return radii;
}

std::vector<Complex> disk_grid(double max_radius, const DiskGrid& grid) {
  if (grid.angles == 0) throw std::invalid_argument("disk_grid: need at least one angle");
  std::vector<Complex> points{Complex{}};
  for (double rho : disk_grid_radii(max_radius, grid)) {
    for (std::size_t k = 0; k < grid.angles; ++k) {
      points.push_back(std::polar(rho, kTwoPi * static_cast<double>(k) / static_cast<double>(grid.angles)));
    }
  }
  return points;
}

std::vector<PointPair> sample_pairs(double max_radius, const PairSampling& sampling) {
  if (!(max_radius > 0.0 && max_radius <= 1.0)) {
    throw std::invalid_argument("sample_pairs: max_radius must lie in (0, 1]");
  }
  std::mt19937_64 rng(sampling.seed);
  const double radius = max_radius * (1.0 - 1e-12);
  std::vector<PointPair> pairs;
  pairs.reserve(sampling.quasi_random + 512);

  // Additive recurrence with the generalized golden ratio of dimension four.
  constexpr double plastic4 = 1.1673039782614187;
  double step[4], shift[4];
  for (int j = 0; j < 4; ++j) {
    step[j] = std::pow(plastic4, -(j + 1));
    shift[j] = unit_uniform(rng);
  }
  for (std::size_t i = 0; i < sampling.quasi_random; ++i) {
    double u[4];
    for (int j = 0; j < 4; ++j) u[j] = std::fmod(shift[j] + static_cast<double>(i + 1) * step[j], 1.0);
    pairs.push_back({disk_point(radius, u[0], u[1]), disk_point(radius, u[2], u[3])});
  }

  // Near the boundary: tangential pairs at two scales and radial pairs.
  for (int k = 1; k <= 8; ++k) {
    const double gap = std::pow(10.0, -k);
    const double rho = radius * (1.0 - gap);
    for (int j = 0; j < 8; ++j) {
      const double t = kTwoPi * (j + unit_uniform(rng)) / 8.0;
      pairs.push_back({std::polar(rho, t), std::polar(rho, t + gap)});
      pairs.push_back({std::polar(rho, t), std::polar(rho, t + std::sqrt(gap))});
      pairs.push_back({std::polar(rho, t), std::polar(radius * (1.0 - 2.0 * gap), t)});
    }
  }
  // Near the diagonal.
  for (int i = 0; i < 16; ++i) {
    const Complex z = disk_point(0.9 * radius, unit_uniform(rng), unit_uniform(rng));
    for (int j = 3; j <= 8; ++j) {
      pairs.push_back({z, z + std::polar(std::pow(10.0, -j), kTwoPi * unit_uniform(rng))});
    }
  }
  // Near the centre.
  for (int i = 0; i < 64; ++i) {
    pairs.push_back({disk_point(0.01 * radius, unit_uniform(rng), unit_uniform(rng)),
                     disk_point(0.01 * radius, unit_uniform(rng), unit_uniform(rng))});
  }
  return pairs;
}

double bloch_constant(const MappingHandle& m, const BlochParams& p, const DiskGrid& grid) {
  if (!(p.alpha > 0.0)) throw std::invalid_argument("bloch_constant: alpha must be positive");
  double best = 0.0;
  for (const Complex z : disk_grid(m.max_radius(), grid)) {
    const double d = distance(z);
    best = std::max(best, jet_norms(m.jet(z)).op_norm * p.omega(std::pow(d, p.alpha)));
  }
  return best;
}

double bloch_norm(const MappingHandle& m, const BlochParams& p, const DiskGrid& grid) {
  return std::abs(m.value(0.0)) + bloch_constant(m, p, grid);
}

double mean_oscillation(const MappingHandle& m, Complex z, double r, const PolarGrid& grid) {
  if (!(r > 0.0) || r > distance(z) * (1.0 + 1e-12)) {
    std::ostringstream msg;
    msg << "mean_oscillation: radius " << r << " must lie in (0, d(z)] with d(z) = " << distance(z);
    throw DomainError(msg.str());
  }
  if (grid.radial == 0 || grid.angular == 0) throw std::invalid_argument("mean_oscillation: empty grid");
  const Complex center = m.value(z);
  const GaussRule rule = gauss_legendre(grid.radial, 0.0, r);
  double total = 0.0;
  for (std::size_t k = 0; k < grid.angular; ++k) {
    const Complex unit = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(grid.angular));
    for (Eigen::Index j = 0; j < rule.nodes.size(); ++j) {
      const double rho = rule.nodes(j);
      total += rule.weights(j) * rho * std::abs(m.value(z + rho * unit) - center);
    }
  }
  // (1/(pi r^2)) * (2 pi / n) * sum.
  return 2.0 * total / (static_cast<double>(grid.angular) * r * r);
}

double lipschitz_constant(const MappingHandle& m, const Majorant& omega, std::span<const PointPair> pairs) {
  double best = 0.0;
  for (const auto& [z, w] : pairs) {
    const double gap = std::abs(z - w);
    if (gap == 0.0) continue;
    best = std::max(best, std::abs(m.value(z) - m.value(w)) / omega(gap));
  }
  return best;
}

double derivative_constant(const MappingHandle& m, const Majorant& omega, const DiskGrid& grid) {
  double best = 0.0;
  for (const Complex z : disk_grid(m.max_radius(), grid)) {
    const double d = distance(z);
    if (!(d > 0.0)) continue;
    best = std::max(best, jet_norms(m.jet(z)).op_norm * d / omega(d));
  }
  return best;
}

CurveCondition curve_condition_constant(const Majorant& omega, std::span<const PointPair> pairs) {
  CurveCondition result;
  for (const auto& [z, w] : pairs) {
    const double length = std::abs(z - w);
    if (length == 0.0) continue;
    const double scale = omega(length);
    const double segment = segment_curve_integral(omega, z, w);
    const Complex z_in = pulled_inward(z, length);
    const Complex w_in = pulled_inward(w, length);
    const double detour = radial_curve_integral(omega, distance(z), distance(z_in)) +
                          segment_curve_integral(omega, z_in, w_in) +
                          radial_curve_integral(omega, distance(w), distance(w_in));
    result.segment_constant = std::max(result.segment_constant, segment / scale);
    result.constant = std::max(result.constant, std::min(segment, detour) / scale);
  }
  return result;
}

double weighted_lipschitz(const MappingHandle& m, const BlochParams& p, std::span<const PointPair> pairs) {
  if (!(p.s >= 0.0 && p.s < 1.0)) throw DomainError("weighted_lipschitz: s must lie in [0, 1)");
  if (!(p.alpha >= 1.0 && p.alpha <= p.s + 1.0)) throw DomainError("weighted_lipschitz: alpha must lie in [1, s + 1]");
  double best = 0.0;
  for (const auto& [z, w] : pairs) {
    const double gap = std::abs(z - w);
    if (gap == 0.0) continue;
    const double weight = p.omega(std::pow(distance(z), p.s) * std::pow(distance(w), p.alpha - p.s));
    best = std::max(best, std::abs(m.value(z) - m.value(w)) * weight / gap);
  }
  return best;
}

std::vector<double> radial_profile(const std::function<double(Complex)>& phi, std::span<const double> r_grid,
                                   std::span<const double> theta_grid, std::size_t nodes) {
  if (theta_grid.empty()) throw std::invalid_argument("radial_profile: empty angle grid");
  std::vector<double> profile;
  profile.reserve(r_grid.size());
  for (const double r : r_grid) {
    if (!(r >= 0.0 && r <= 1.0)) throw std::invalid_argument("radial_profile: radii must lie in [0, 1]");
    const GaussRule rule = gauss_legendre(nodes, 0.0, r);
    double best = -std::numeric_limits<double>::infinity();
    for (const double t : theta_grid) {
      const Complex unit = std::polar(1.0, t);
      double integral = 0.0;
      for (Eigen::Index j = 0; j < rule.nodes.size(); ++j) integral += rule.weights(j) * phi(rule.nodes(j) * unit);
      best = std::max(best, integral);
    }
    profile.push_back(best);
  }
  return profile;
}

MapMeasurements measure_map(const MappingHandle& m, const Tolerances& tol) {
  MapMeasurements out;
  if (m.exact_K()) {
    out.K = *m.exact_K();
    out.K_exact = true;
  } else {
    out.K = qc_constant(m).value * tol.sup_inflation;
  }
  out.perimeter = perimeter_sup(m).sup_estimate;
  out.radial_sup = radial_length_sup(m).value;
  out.source_sup = m.source().sup_norm();
  return out;
}

}  // namespace diskpoisson
