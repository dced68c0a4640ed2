#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "diskpoisson/solver.hpp"

namespace diskpoisson {

/// Parameters a catalog family was instantiated with.
struct CatalogParams {
  std::optional<double> scale;   // M
  std::optional<Complex> beta;   // shear coefficient
  std::optional<Complex> c;      // source coefficient
};

/// A closed-form test mapping on the closed unit disk, with exact Wirtinger
/// derivatives, exact Laplacian g = Delta f and, where known, the exact
/// quasiconformal constant.
///
/// Construction checks 4 d/dzbar f_z = g and d/dz f = f_z by central
/// differences on a sample grid, and that exact_K bounds the distortion there.
class CatalogMap {
 public:
  CatalogMap(std::string label, ComplexField f, ComplexField f_z, ComplexField f_zbar, ComplexField g,
             std::optional<double> exact_K = std::nullopt, CatalogParams params = {});

  /// f(z) = z.
  static CatalogMap identity();
  /// f(z) = M z, M > 0.
  static CatalogMap scale(double M);
  /// f(z) = z + beta conj(z), |beta| < 1; K = (1 + |beta|)/(1 - |beta|).
  static CatalogMap shear(Complex beta);
  /// f(z) = z + c |z|^2, |c| < 1/2; g = 4c, K = 1/(1 - 2|c|).
  static CatalogMap quadratic_source(Complex c);
  /// f(z) = z + c z |z|^2, real |c| < 1/3; g = 8 c z.
  static CatalogMap cubic(double c);

  /// The map factor * f.
  CatalogMap scaled(double factor) const;

  const std::string& label() const { return label_; }
  Complex value(Complex z) const { return f_(z); }
  WirtingerJet jet(Complex z) const { return {f_(z), f_z_(z), f_zbar_(z)}; }
  Complex laplacian(Complex z) const { return g_(z); }
  const ComplexField& source_function() const { return g_; }
  /// g vanishes identically.
  bool harmonic() const { return harmonic_; }
  std::optional<double> exact_K() const { return exact_K_; }
  const CatalogParams& params() const { return params_; }

 private:
  std::string label_;
  ComplexField f_, f_z_, f_zbar_, g_;
  std::optional<double> exact_K_;
  CatalogParams params_;
  bool harmonic_ = false;
};

/// Parses `identity`, `scale:M`, `shear:b`, `quadratic-source:c`, `cubic:c`.
/// Complex parameters are written `re` or `re,im`. Throws std::invalid_argument.
CatalogMap catalog_from_label(std::string_view label);

/// identity, scale:2, shear:0.5, quadratic-source:0.1, cubic:0.1.
std::vector<CatalogMap> default_catalog();

struct CatalogEntry {
  std::string pattern;
  std::string description;
  std::string exact_K;
  std::string source;
};

/// Human-readable description of every catalog family.
std::vector<CatalogEntry> catalog_listing();

}  // namespace diskpoisson
