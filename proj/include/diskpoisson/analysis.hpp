#pragma once

// Function-space functionals (Bloch and Lipschitz constants, mean
// oscillation, boundary Fourier coefficients) and inequality verifiers.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "diskpoisson/geometry.hpp"
#include "diskpoisson/majorant.hpp"
#include "diskpoisson/mapping.hpp"

namespace diskpoisson {

// ---------------------------------------------------------------------------
// Boundary spectrum

/// psi(e^{it}) = sum_{n>=0} a_n e^{int} + sum_{n>=1} conj(b_n) e^{-int}, so that
/// P[psi](z) = sum a_n z^n + sum conj(b_n) conj(z)^n.
struct CoefficientSpectrum {
  /// a(n) for n = 0..n_max.
  Eigen::VectorXcd a;
  /// b(n) for n = 0..n_max; b(0) is always zero.
  Eigen::VectorXcd b;
  std::size_t samples = 0;
  /// Share of the discrete energy carried by frequencies |n| >= 3N/8.
  double tail_energy_fraction = 0.0;
  /// tail_energy_fraction > 1e-8.
  bool aliasing = false;

  std::size_t n_max() const { return static_cast<std::size_t>(a.size()) - 1; }
};

/// Discrete Fourier coefficients of the boundary samples. Requires n_max < N/2.
CoefficientSpectrum harmonic_coefficients(const BoundaryData& boundary, std::size_t n_max);

/// Boundary samples of the truncated series at n points (n_max < n/2).
BoundaryData reconstruct(const CoefficientSpectrum& spectrum, std::size_t n);

/// The harmonic extension P[psi] as a trimmed power series, evaluable on the
/// closed disk.
class HarmonicSeries {
 public:
  /// Coefficients below `trim` times the largest one are dropped.
  explicit HarmonicSeries(const CoefficientSpectrum& spectrum, double trim = 1e-13);

  WirtingerJet jet(Complex z) const;
  std::size_t terms() const { return a_.size(); }

 private:
  std::vector<Complex> a_;
  std::vector<Complex> b_;
};

// ---------------------------------------------------------------------------
// Reports

struct Tolerances {
  /// Absolute slack for maps with closed-form jets.
  double closed_form = 1e-8;
  /// Absolute slack for quadrature-backed maps.
  double solver_backed = 1e-4;
  /// |margin| below this (scaled by max(1, rhs)) marks a sharp case.
  double sharpness = 1e-6;
  /// Factor applied to grid suprema before they enter a bound.
  double sup_inflation = 1.01;
};

double absolute_tolerance(const MappingHandle& m, const Tolerances& tol);

using NumericRecord = std::vector<std::pair<std::string, double>>;
using TextRecord = std::vector<std::pair<std::string, std::string>>;

struct VerificationReport {
  std::string theorem_id;
  std::string map;
  double lhs = 0.0;
  double rhs = 0.0;
  /// rhs - lhs.
  double margin = 0.0;
  /// margin >= -tolerance.
  bool holds = false;
  /// |margin| < sharpness_tolerance.
  bool sharp = false;
  NumericRecord inputs;
  TextRecord labels;
  /// Empirical constants and diagnostics.
  NumericRecord constants;
  double tolerance = 0.0;
  double sharpness_tolerance = 0.0;
};

VerificationReport make_report(std::string theorem_id, std::string map, double lhs, double rhs, double tolerance,
                               double sharpness_tolerance, NumericRecord inputs = {}, NumericRecord constants = {},
                               TextRecord labels = {});

// ---------------------------------------------------------------------------
// Sampling

/// Polar sample set: the centre, `uniform_radii` equispaced radii below
/// max_radius and the boundary layer max_radius (1 - 2^-k), k = 1..boundary_levels,
/// each with `angles` equispaced angles. When max_radius < 1 it is itself included.
struct DiskGrid {
  std::size_t uniform_radii = 32;
  std::size_t boundary_levels = 12;
  std::size_t angles = 64;
};

std::vector<double> disk_grid_radii(double max_radius, const DiskGrid& grid);
std::vector<Complex> disk_grid(double max_radius, const DiskGrid& grid);

struct PointPair {
  Complex z;
  Complex w;
};

struct PairSampling {
  std::uint64_t seed = 7;
  /// Pairs from a randomly shifted four-dimensional Kronecker sequence.
  std::size_t quasi_random = 10000;
};

/// Quasi-random pairs in |z| < max_radius plus adversarial pairs: near the
/// boundary, near the diagonal and near the centre.
std::vector<PointPair> sample_pairs(double max_radius, const PairSampling& sampling = {});

// ---------------------------------------------------------------------------
// Functionals

/// omega with the exponent alpha of the weight omega(d^alpha) and the
/// exponent s of the two-point weight.
struct BlochParams {
  Majorant omega = Majorant::linear();
  double alpha = 1.0;
  double s = 0.0;
};

/// sup ||D_f(z)|| omega(d(z)^alpha) over the grid.
double bloch_constant(const MappingHandle& m, const BlochParams& p, const DiskGrid& grid = {});

/// |f(0)| + bloch_constant.
double bloch_norm(const MappingHandle& m, const BlochParams& p, const DiskGrid& grid = {});

/// (1/(pi r^2)) int_{D(z, r)} |f(zeta) - f(z)| dA(zeta), 0 < r <= d(z).
double mean_oscillation(const MappingHandle& m, Complex z, double r, const PolarGrid& grid = {32, 64});

/// sup |f(z) - f(w)| / omega(|z - w|) over the pairs.
double lipschitz_constant(const MappingHandle& m, const Majorant& omega, std::span<const PointPair> pairs);

/// sup ||D_f(z)|| d(z) / omega(d(z)) over the grid points with d(z) > 0.
double derivative_constant(const MappingHandle& m, const Majorant& omega, const DiskGrid& grid = {});

struct CurveCondition {
  /// sup over pairs of min(segment, detour) / omega(|z - w|).
  double constant = 0.0;
  /// The same supremum using straight segments only.
  double segment_constant = 0.0;
};

/// Path integrals int omega(d)/d ds over the straight segment and over the
/// detour that moves each endpoint radially inward by |z - w| before crossing.
CurveCondition curve_condition_constant(const Majorant& omega, std::span<const PointPair> pairs);

/// sup |f(z) - f(w)| omega(d(z)^s d(w)^(alpha - s)) / |z - w|; requires
/// 0 <= s < 1 and 1 <= alpha <= s + 1.
double weighted_lipschitz(const MappingHandle& m, const BlochParams& p, std::span<const PointPair> pairs);

/// A(r) = sup over theta_grid of int_0^r phi(rho e^{it}) d rho, one value per radius.
std::vector<double> radial_profile(const std::function<double(Complex)>& phi, std::span<const double> r_grid,
                                   std::span<const double> theta_grid, std::size_t nodes = 32);

/// Measured inputs of the coefficient bounds.
struct MapMeasurements {
  /// exact_K when known, else the inflated grid estimate.
  double K = 1.0;
  bool K_exact = false;
  /// l_f(1).
  double perimeter = 0.0;
  /// M = sup_t l*_f(1, t).
  double radial_sup = 0.0;
  double source_sup = 0.0;
};

MapMeasurements measure_map(const MappingHandle& m, const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Verifiers

/// sup ||D_f|| d / omega(d) against 40 lip_constant + ||g|| / (6 omega(1)), and
/// boundedness of that supremum as the grid approaches the circle.
VerificationReport verify_thm1_necessity(const MappingHandle& m, double lip_constant, const Majorant& omega,
                                         const DiskGrid& grid = {}, const Tolerances& tol = {});

/// |f(z) - f(w)| <= int_[z,w] ||D_f|| ds for every pair, and
/// sup |f(z) - f(w)| / omega(|z - w|) <= deriv_constant * curve constant.
VerificationReport verify_thm1_sufficiency(const MappingHandle& m, double deriv_constant, const Majorant& omega,
                                           std::span<const PointPair> pairs, const Tolerances& tol = {});

/// ||D_f(a)|| <= (1/(pi r)) int |f(a + r e^{it}) - f(a)| dt + (2 ||g|| / 3) r, 0 < r < 1 - |a|.
VerificationReport verify_lemma22(const MappingHandle& m, Complex a, double r, const Tolerances& tol = {},
                                  std::size_t circle_nodes = 256);

struct GreenDerivativeGrid {
  std::size_t uniform_radii = 32;
  /// Extra radii 1 - 10^-k, k = 1..boundary_levels.
  std::size_t boundary_levels = 4;
  std::size_t angles = 16;
  AreaQuadrature quadrature{};
};

/// max(sup |d/dz G[g]|, sup |d/dzbar G[g]|) <= ||g|| / 3.
VerificationReport verify_lemma21(const SourceField& source, const std::string& label,
                                  const GreenDerivativeGrid& grid = {}, double tolerance = 1e-8);

/// Per n = 1..n_max: |a_n| + |b_n| <= K l / (2 n pi) + 2 ||g|| / (3 n); then the
/// derivative bound sup ||D_{P[f]}|| (1 - |z|^2) <= sqrt(l^2 K / 4pi^2 + 4 ||g||^2 / 9 + l sqrt(K) ||g|| / (3 pi)).
std::vector<VerificationReport> verify_thm3(const MappingHandle& m, std::size_t n_max = 32, const Tolerances& tol = {},
                                            std::size_t boundary_nodes = kDefaultBoundaryNodes);

/// Per n = 1..n_max: |a_n| + |b_n| <= K M + 2 ||g|| / 3.
std::vector<VerificationReport> verify_thm4(const MappingHandle& m, std::size_t n_max = 32, const Tolerances& tol = {},
                                            std::size_t boundary_nodes = kDefaultBoundaryNodes);

/// Centres used by the oscillation verifiers: `count` points on
/// ceil(sqrt(count)) radii inside max_radius.
std::vector<Complex> oscillation_sample_points(double max_radius, std::size_t count = 100);

/// Radii fractions of the available distance at which oscillations are sampled.
inline constexpr double kOscillationRadii[] = {0.25, 0.5, 1.0};

/// sup of mean_oscillation(z, r) omega(r^alpha) / r over the points and radii.
double oscillation_constant(const MappingHandle& m, const BlochParams& p, std::span<const Complex> points);

/// ||D_f(z)|| <= 3 C / omega(r^alpha) + ||g|| r / 2 at every point and radius.
VerificationReport verify_thm2_forward(const MappingHandle& m, const BlochParams& p, double osc_constant,
                                       std::span<const Complex> points, const Tolerances& tol = {});

/// mean_oscillation(z, r) <= (2 C / (2 - alpha)) r / omega(r^alpha) at every point and radius.
VerificationReport verify_thm2_reverse(const MappingHandle& m, const BlochParams& p, double bloch_const,
                                       std::span<const Complex> points, const Tolerances& tol = {});

/// Radial-integral checks on the harmonic part: the normalized profile
/// A(r) <= r, and int_0^r ||D_{P[f]}|| <= K M + (2/3) ||g|| r along each ray.
std::vector<VerificationReport> verify_schwarz(const MappingHandle& m, const Tolerances& tol = {},
                                               std::size_t boundary_nodes = kDefaultBoundaryNodes);

/// area(f(D)) <= l_f(1)^2 / (4 pi).
VerificationReport verify_isoperimetric(const MappingHandle& m, const Tolerances& tol = {});

}  // namespace diskpoisson
