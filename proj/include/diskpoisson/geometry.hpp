#pragma once

// Geometric functionals of a mapping: perimeter, radial length, image area,
// the isoperimetric comparison and the quasiconformal constant.

#include <cstddef>
#include <span>
#include <vector>

#include "diskpoisson/kernels.hpp"
#include "diskpoisson/mapping.hpp"

namespace diskpoisson {

/// l_f(r) = r int_0^2pi |f_z - e^{-2it} f_zbar| dt at z = r e^{it}, by the
/// periodic trapezoid rule. r = 1 is accepted for boundary-regular maps.
double perimeter(const MappingHandle& m, double r, std::size_t nodes = 1024);

/// r = 1 - 2^-k, k = 1..levels.
std::vector<double> default_radius_grid(std::size_t levels = 12);

struct LengthProfile {
  std::vector<double> radii;
  std::vector<double> values;
  /// l_f(1): evaluated at r = 1 for boundary-regular maps, otherwise
  /// extrapolated quadratically from the last three radii.
  double limit = 0.0;
  /// max(max of values, limit).
  double sup_estimate = 0.0;
  bool monotone = true;
  bool increasing_at_end = false;
};

/// Perimeters on an increasing grid in (0, 1). Radii beyond the map's
/// max_radius are dropped.
LengthProfile perimeter_sup(const MappingHandle& m, std::span<const double> r_grid, std::size_t nodes = 1024);
LengthProfile perimeter_sup(const MappingHandle& m);

/// l*_f(r, t) = int_0^r |f_z + e^{-2it} f_zbar| d rho along the ray of angle t,
/// by Gauss-Legendre quadrature.
double radial_length(const MappingHandle& m, const Angle& theta, double r, std::size_t nodes = 64);

struct RadialLengthSup {
  double value = 0.0;
  double theta = 0.0;
  /// Radius the rays were integrated to.
  double radius = 0.0;
};

/// M = sup_t l*_f(1, t) over `angles` equispaced rays, integrated to the
/// map's max_radius.
RadialLengthSup radial_length_sup(const MappingHandle& m, std::size_t angles = 256, std::size_t nodes = 64);

struct PolarGrid {
  std::size_t radial = 64;
  std::size_t angular = 256;
};

/// area(f(D_r)) = int_{D_r} J_f dA by Gauss-Legendre in the radius and the
/// trapezoid rule in the angle. Throws SenseReversalError if J_f <= 0 at a node.
double image_area(const MappingHandle& m, double r, const PolarGrid& grid = {});

struct IsoperimetricResult {
  double area = 0.0;
  double perimeter = 0.0;
  /// perimeter^2 / (4 pi).
  double bound = 0.0;
  bool holds = false;
};

/// area(f(D)) <= l_f(1)^2 / (4 pi), with relative slack `tolerance`.
IsoperimetricResult isoperimetric_check(const MappingHandle& m, double tolerance = 1e-8);

struct QcEstimate {
  /// max ||D_f|| / lambda(D_f) over the grid.
  double value = 1.0;
  Complex argmax{};
  /// ||D_f||^2 <= value |J_f| at every node.
  bool squared_form_holds = true;
};

/// Grid estimate of the quasiconformal constant on |z| <= max_radius.
/// Throws DegenerateError when lambda(D_f) < 1e-12 at a node.
QcEstimate qc_constant(const MappingHandle& m, const PolarGrid& grid = {32, 64});

}  // namespace diskpoisson
