#pragma once

// Quadrature realization of f = P[psi] - G[g], the solution of the Dirichlet
// problem Delta f = g in the unit disk with f = psi on the circle.

#include <complex>
#include <cstddef>
#include <functional>

#include <Eigen/Core>

#include "diskpoisson/kernels.hpp"

namespace diskpoisson {

using Complex = std::complex<double>;
using ComplexField = std::function<Complex(Complex)>;

/// Dirichlet datum psi sampled at theta_k = 2 pi k / N, N a power of two, N >= 16.
class BoundaryData {
 public:
  explicit BoundaryData(Eigen::VectorXcd samples);

  /// Samples psi(e^{i theta_k}) from a function of the angle.
  static BoundaryData sample(const std::function<Complex(double)>& psi, std::size_t n);

  std::size_t size() const { return static_cast<std::size_t>(samples_.size()); }
  const Eigen::VectorXcd& samples() const { return samples_; }
  double angle(std::size_t k) const;

 private:
  Eigen::VectorXcd samples_;
};

/// Right-hand side g of Delta f = g, with an estimated sup norm.
///
/// The sup norm is the maximum of |g| over a polar grid of the closed disk
/// (grid_resolution radii including 0 and 1, by grid_resolution angles),
/// inflated by 1%.
class SourceField {
 public:
  explicit SourceField(ComplexField g, std::size_t grid_resolution = 201);

  static SourceField zero();
  static SourceField constant(Complex c);

  Complex operator()(Complex w) const { return g_(w); }
  double sup_norm() const { return sup_norm_; }
  std::size_t grid_resolution() const { return grid_resolution_; }
  bool is_zero() const { return zero_; }
  const ComplexField& function() const { return g_; }

 private:
  SourceField(ComplexField g, std::size_t grid_resolution, bool zero);

  ComplexField g_;
  double sup_norm_ = 0.0;
  std::size_t grid_resolution_ = 0;
  bool zero_ = false;
};

/// Area quadrature for the Green potential: a polar rule centred at the
/// evaluation point with Gauss-Legendre radial nodes and uniform angles.
struct AreaQuadrature {
  std::size_t radial_nodes = 64;
  std::size_t angular_nodes = 128;
  /// Re-evaluate at half resolution and fail when the two disagree.
  bool refinement_check = false;
  double refinement_tolerance = 1e-8;
};

/// (f, f_z, f_zbar) at a point.
struct WirtingerJet {
  Complex f{};
  Complex f_z{};
  Complex f_zbar{};
};

struct JetNorms {
  /// ||D_f|| = |f_z| + |f_zbar|.
  double op_norm = 0.0;
  /// lambda(D_f) = | |f_z| - |f_zbar| |.
  double min_stretch = 0.0;
  /// J_f = |f_z|^2 - |f_zbar|^2.
  double jacobian = 0.0;
};

JetNorms jet_norms(const WirtingerJet& jet);

/// Boundary sampling is too coarse for points with 1 - |z| < kResolutionFactor / N.
inline constexpr double kResolutionFactor = 10.0;

/// P[psi](z) by the periodic trapezoid rule over the boundary samples.
Complex poisson_integral(const BoundaryData& boundary, const Point& z);

/// G[g](z) = (1/2pi) int_D G(z, w) g(w) dA(w).
Complex green_potential(const SourceField& source, const Point& z, const AreaQuadrature& quadrature = {});

/// (G[g], d/dz G[g], d/dzbar G[g]) at z, the derivatives from the closed-form
/// kernel d/dz G(z, w).
WirtingerJet green_potential_jet(const SourceField& source, const Point& z, const AreaQuadrature& quadrature = {});

/// (P[psi], d/dz P[psi], d/dzbar P[psi]) at z.
WirtingerJet poisson_integral_jet(const BoundaryData& boundary, const Point& z);

/// f = P[psi] - G[g]; immutable once built.
class PoissonSolution {
 public:
  PoissonSolution(BoundaryData boundary, SourceField source, AreaQuadrature quadrature = {});

  const BoundaryData& boundary() const { return boundary_; }
  const SourceField& source() const { return source_; }
  const AreaQuadrature& quadrature() const { return quadrature_; }

  /// Largest |z| accepted by the boundary resolution check: 1 - 10/N.
  double admissible_radius() const;

 private:
  BoundaryData boundary_;
  SourceField source_;
  AreaQuadrature quadrature_;
};

Complex solve(const PoissonSolution& solution, const Point& z);

/// Jet of f at z from the differentiated Poisson and Green kernels.
WirtingerJet wirtinger_jet(const PoissonSolution& solution, const Point& z);

/// Jet at w of a solution of Delta f = g, rebuilt on the sub-disk D(a, r)
/// from F(z) = f(z + a) - f(a):
///   F(u) = (1/2pi) int P(u/r, e^{it}) F(r e^{it}) dt - (r^2/2pi) int_D G(u/r, zeta) g(r zeta + a) dA(zeta).
/// `f` must be evaluable on the circle |w - a| = r.
WirtingerJet subdisk_jet(const ComplexField& f, const SourceField& source, const Point& a, double r,
                         const Point& w, std::size_t circle_nodes = 256, const AreaQuadrature& quadrature = {});

/// |Delta_h f(z) - g(z)| with the five-point Laplacian of radius h.
double laplacian_residual(const PoissonSolution& solution, const Point& z, double h);

}  // namespace diskpoisson
