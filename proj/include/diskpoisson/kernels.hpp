#pragma once

// Green and Poisson kernels of the unit disk and the Wirtinger derivatives of
// their rescaled versions on a sub-disk D(z, r).
//
// All functions are pure and header-only. The `unchecked` namespace holds the
// raw formulas used inside quadrature loops; the public overloads validate
// their arguments first.

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

#include "diskpoisson/errors.hpp"

namespace diskpoisson {

/// Inputs closer than this to a singular configuration are rejected.
inline constexpr double kCollisionEpsilon = 1e-12;

/// A point of the unit disk.
template <typename Scalar>
class DiskPoint {
 public:
  using Complex = std::complex<Scalar>;

  /// Point of the open disk, |z| < 1.
  static DiskPoint interior(Complex z) {
    if (!(std::abs(z) < Scalar(1))) {
      std::ostringstream msg;
      msg << "point " << z << " is not in the open unit disk";
      throw DomainError(msg.str());
    }
    return DiskPoint(z);
  }
  static DiskPoint interior(Scalar re, Scalar im) { return interior(Complex(re, im)); }

  /// Point of the closed disk, |z| <= 1.
  static DiskPoint closed(Complex z) {
    if (!(std::abs(z) <= Scalar(1))) {
      std::ostringstream msg;
      msg << "point " << z << " is not in the closed unit disk";
      throw DomainError(msg.str());
    }
    return DiskPoint(z);
  }

  Complex value() const { return z_; }
  Scalar re() const { return z_.real(); }
  Scalar im() const { return z_.imag(); }
  Scalar modulus() const { return std::abs(z_); }

  /// d(z) = 1 - |z|.
  Scalar boundary_distance() const { return Scalar(1) - std::abs(z_); }

  friend bool operator==(const DiskPoint&, const DiskPoint&) = default;

 private:
  explicit DiskPoint(Complex z) : z_(z) {}
  Complex z_;
};

/// An angle on the unit circle, stored in [0, 2pi).
template <typename Scalar>
class BoundaryAngle {
 public:
  BoundaryAngle() = default;
  explicit BoundaryAngle(Scalar theta) : theta_(wrap(theta)) {}

  Scalar radians() const { return theta_; }

  /// e^{i theta}.
  std::complex<Scalar> unit() const { return std::polar(Scalar(1), theta_); }

  friend bool operator==(const BoundaryAngle& a, const BoundaryAngle& b) {
    const Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
    const Scalar diff = std::abs(a.theta_ - b.theta_);
    const Scalar tol = Scalar(16) * std::numeric_limits<Scalar>::epsilon() * two_pi;
    return diff <= tol || std::abs(diff - two_pi) <= tol;
  }

 private:
  static Scalar wrap(Scalar theta) {
    const Scalar two_pi = 2 * std::numbers::pi_v<Scalar>;
    Scalar t = std::fmod(theta, two_pi);
    if (t < 0) t += two_pi;
    if (t >= two_pi) t -= two_pi;
    return t;
  }

  Scalar theta_ = 0;
};

namespace unchecked {

/// G(z, w) = log |(1 - z conj(w)) / (z - w)|, as half the log of a ratio of squared moduli.
template <typename Scalar>
Scalar green(const std::complex<Scalar>& z, const std::complex<Scalar>& w) {
  return Scalar(0.5) * std::log(std::norm(Scalar(1) - z * std::conj(w)) / std::norm(z - w));
}

/// P(z, e^{it}) = (1 - |z|^2) / |1 - z e^{-it}|^2, with e^{it} passed as `unit`.
template <typename Scalar>
Scalar poisson(const std::complex<Scalar>& z, const std::complex<Scalar>& unit) {
  return (Scalar(1) - std::norm(z)) / std::norm(Scalar(1) - z * std::conj(unit));
}

/// d/dw P((w - z)/r, e^{it}) expressed through u = w - z and e^{it}.
template <typename Scalar>
std::complex<Scalar> scaled_poisson_dw(const std::complex<Scalar>& u, Scalar r,
                                       const std::complex<Scalar>& unit) {
  const Scalar dist2 = std::norm(u - r * unit);
  const Scalar mass = r * r - std::norm(u);
  const std::complex<Scalar> num = -std::conj(u) * dist2 - mass * (std::conj(u) - r * std::conj(unit));
  return num / (dist2 * dist2);
}

/// d/dconj(w) P((w - z)/r, e^{it}).
template <typename Scalar>
std::complex<Scalar> scaled_poisson_dwbar(const std::complex<Scalar>& u, Scalar r,
                                          const std::complex<Scalar>& unit) {
  const Scalar dist2 = std::norm(u - r * unit);
  const Scalar mass = r * r - std::norm(u);
  const std::complex<Scalar> num = -u * dist2 - mass * (u - r * unit);
  return num / (dist2 * dist2);
}

/// d/dw G((w - z)/r, zeta) = r(|zeta|^2 - 1) / (2 [r - u conj(zeta)] (u - r zeta)).
template <typename Scalar>
std::complex<Scalar> scaled_green_dw(const std::complex<Scalar>& u, Scalar r,
                                     const std::complex<Scalar>& zeta) {
  return Scalar(0.5) * r * (std::norm(zeta) - Scalar(1)) /
         ((r - u * std::conj(zeta)) * (u - r * zeta));
}

/// d/dconj(w) G((w - z)/r, zeta); the complex conjugate of scaled_green_dw.
template <typename Scalar>
std::complex<Scalar> scaled_green_dwbar(const std::complex<Scalar>& u, Scalar r,
                                        const std::complex<Scalar>& zeta) {
  return Scalar(0.5) * r * (std::norm(zeta) - Scalar(1)) /
         ((r - std::conj(u) * zeta) * (std::conj(u) - r * std::conj(zeta)));
}

}  // namespace unchecked

template <typename Scalar>
Scalar green_kernel(const DiskPoint<Scalar>& z, const DiskPoint<Scalar>& w) {
  if (std::abs(z.value() - w.value()) < Scalar(kCollisionEpsilon)) {
    throw SingularityError("green_kernel: coincident points");
  }
  return unchecked::green(z.value(), w.value());
}

template <typename Scalar>
Scalar poisson_kernel(const DiskPoint<Scalar>& z, const BoundaryAngle<Scalar>& t) {
  return unchecked::poisson(z.value(), t.unit());
}

namespace detail {

template <typename Scalar>
std::complex<Scalar> subdisk_offset(const DiskPoint<Scalar>& w, const DiskPoint<Scalar>& z, Scalar r) {
  if (!(r > 0)) throw DomainError("sub-disk radius must be positive");
  const std::complex<Scalar> u = w.value() - z.value();
  if (!(std::abs(u) < r)) throw DomainError("point lies outside the sub-disk D(z, r)");
  return u;
}

}  // namespace detail

template <typename Scalar>
std::complex<Scalar> scaled_poisson_dw(const DiskPoint<Scalar>& w, const DiskPoint<Scalar>& z, Scalar r,
                                       const BoundaryAngle<Scalar>& t) {
  return unchecked::scaled_poisson_dw(detail::subdisk_offset(w, z, r), r, t.unit());
}

template <typename Scalar>
std::complex<Scalar> scaled_poisson_dwbar(const DiskPoint<Scalar>& w, const DiskPoint<Scalar>& z, Scalar r,
                                          const BoundaryAngle<Scalar>& t) {
  return unchecked::scaled_poisson_dwbar(detail::subdisk_offset(w, z, r), r, t.unit());
}

template <typename Scalar>
std::complex<Scalar> scaled_green_dw(const DiskPoint<Scalar>& w, const DiskPoint<Scalar>& z, Scalar r,
                                     const DiskPoint<Scalar>& zeta) {
  const auto u = detail::subdisk_offset(w, z, r);
  if (std::abs(u - r * zeta.value()) < Scalar(kCollisionEpsilon) * r) {
    throw SingularityError("scaled_green_dw: (w - z)/r coincides with zeta");
  }
  return unchecked::scaled_green_dw(u, r, zeta.value());
}

template <typename Scalar>
std::complex<Scalar> scaled_green_dwbar(const DiskPoint<Scalar>& w, const DiskPoint<Scalar>& z, Scalar r,
                                        const DiskPoint<Scalar>& zeta) {
  const auto u = detail::subdisk_offset(w, z, r);
  if (std::abs(u - r * zeta.value()) < Scalar(kCollisionEpsilon) * r) {
    throw SingularityError("scaled_green_dwbar: (w - z)/r coincides with zeta");
  }
  return unchecked::scaled_green_dwbar(u, r, zeta.value());
}

using Point = DiskPoint<double>;
using Angle = BoundaryAngle<double>;

}  // namespace diskpoisson
