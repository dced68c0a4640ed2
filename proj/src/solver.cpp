#include "diskpoisson/solver.hpp"

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

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void check_resolution(const BoundaryData& boundary, const Point& z) {
  const double limit = kResolutionFactor / static_cast<double>(boundary.size());
  if (z.boundary_distance() < limit * (1.0 - 1e-9)) {
    std::ostringstream msg;
    msg << "point at distance " << z.boundary_distance() << " from the circle needs more than "
        << boundary.size() << " boundary samples";
    throw ResolutionError(msg.str());
  }
}

// (1/2pi) int_D K(zeta) dA(zeta) for K singular like log or 1/|zeta - center|,
// by polar coordinates about `center`; `integrand(zeta, rho, direction)` must
// return rho * K(zeta).
template <typename Integrand>
Complex polar_area_mean(Complex center, const AreaQuadrature& q, Integrand&& integrand) {
  const GaussRule radial = squared_gauss_legendre(q.radial_nodes);
  const double center_norm = std::norm(center);
  Complex total{};
  for (std::size_t k = 0; k < q.angular_nodes; ++k) {
    const Complex direction = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(q.angular_nodes));
    const double x = (std::conj(center) * direction).real();
    const double reach = -x + std::sqrt(x * x + 1.0 - center_norm);
    Complex ray{};
    for (Eigen::Index j = 0; j < radial.nodes.size(); ++j) {
      const double rho = reach * radial.nodes(j);
      ray += radial.weights(j) * integrand(center + rho * direction, rho, direction);
    }
    total += reach * ray;
  }
  return total / static_cast<double>(q.angular_nodes);
}

// Value and Wirtinger derivatives of (1/2pi) int_D G(center, zeta) h(zeta) dA(zeta).
template <typename Source>
WirtingerJet green_jet_about(Complex center, const AreaQuadrature& q, Source&& h) {
  const GaussRule radial = squared_gauss_legendre(q.radial_nodes);
  const double center_norm = std::norm(center);
  Complex value{}, dz{}, dzbar{};
  for (std::size_t k = 0; k < q.angular_nodes; ++k) {
    const Complex direction = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(q.angular_nodes));
    const double x = (std::conj(center) * direction).real();
    const double reach = -x + std::sqrt(x * x + 1.0 - center_norm);
    Complex ray_value{}, ray_dz{}, ray_dzbar{};
    for (Eigen::Index j = 0; j < radial.nodes.size(); ++j) {
      const double rho = reach * radial.nodes(j);
      const Complex zeta = center + rho * direction;
      const Complex g = h(zeta);
      const Complex reflect = 1.0 - center * std::conj(zeta);
      const double w = radial.weights(j);
      // rho * G(center, zeta), with |center - zeta| = rho exactly.
      const double green = 0.5 * std::log(std::norm(reflect)) - std::log(rho);
      ray_value += w * rho * green * g;
      // rho * dG/dz = -(|zeta|^2 - 1) / (2 (1 - z conj(zeta)) e^{i phi}).
      const double mass = 0.5 * (std::norm(zeta) - 1.0);
      ray_dz += w * (-mass / (reflect * direction)) * g;
      ray_dzbar += w * (-mass / (std::conj(reflect) * std::conj(direction))) * g;
    }
    value += reach * ray_value;
    dz += reach * ray_dz;
    dzbar += reach * ray_dzbar;
  }
  const double n = static_cast<double>(q.angular_nodes);
  return {value / n, dz / n, dzbar / n};
}

AreaQuadrature halved(const AreaQuadrature& q) {
  AreaQuadrature coarse = q;
  coarse.radial_nodes = std::max<std::size_t>(1, q.radial_nodes / 2);
  coarse.angular_nodes = std::max<std::size_t>(1, q.angular_nodes / 2);
  coarse.refinement_check = false;
  return coarse;
}

void check_refinement(Complex fine, Complex coarse, const AreaQuadrature& q) {
  const double gap = std::abs(fine - coarse);
  if (gap > q.refinement_tolerance * std::max(1.0, std::abs(fine))) {
    std::ostringstream msg;
    msg << "Green potential quadrature did not converge: refinement changed the value by " << gap;
    throw ConvergenceError(msg.str());
  }
}

void check_area_quadrature(const AreaQuadrature& q) {
  if (q.radial_nodes == 0 || q.angular_nodes == 0) {
    throw std::invalid_argument("area quadrature needs at least one radial and one angular node");
  }
}

}  // namespace

BoundaryData::BoundaryData(Eigen::VectorXcd samples) : samples_(std::move(samples)) {
  const auto n = static_cast<std::size_t>(samples_.size());
  if (n < 16 || !is_power_of_two(n)) {
    throw std::invalid_argument("BoundaryData: sample count must be a power of two >= 16");
  }
  if (!samples_.allFinite()) throw std::invalid_argument("BoundaryData: samples must be finite");
}

BoundaryData BoundaryData::sample(const std::function<Complex(double)>& psi, std::size_t n) {
  Eigen::VectorXcd samples(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) {
    samples(static_cast<Eigen::Index>(k)) = psi(kTwoPi * static_cast<double>(k) / static_cast<double>(n));
  }
  return BoundaryData(std::move(samples));
}

double BoundaryData::angle(std::size_t k) const {
  return kTwoPi * static_cast<double>(k) / static_cast<double>(size());
}

SourceField::SourceField(ComplexField g, std::size_t grid_resolution, bool zero)
    : g_(std::move(g)), grid_resolution_(grid_resolution), zero_(zero) {}

SourceField::SourceField(ComplexField g, std::size_t grid_resolution)
    : g_(std::move(g)), grid_resolution_(grid_resolution) {
  if (!g_) throw std::invalid_argument("SourceField: empty function");
  if (grid_resolution_ < 3) throw std::invalid_argument("SourceField: grid resolution must be at least 3");

  const std::size_t n = grid_resolution_;
  Eigen::MatrixXd modulus(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  Eigen::MatrixXcd values(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const double rho = static_cast<double>(i) / static_cast<double>(n - 1);
    for (std::size_t k = 0; k < n; ++k) {
      const Complex w = std::polar(rho, kTwoPi * static_cast<double>(k) / static_cast<double>(n));
      const Complex v = g_(w);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw std::invalid_argument("SourceField: g is not finite on the closed disk");
      }
      values(i, k) = v;
      modulus(i, k) = std::abs(v);
    }
  }
  const double raw_sup = modulus.maxCoeff();
  sup_norm_ = 1.01 * raw_sup;
  zero_ = raw_sup == 0.0;

  // Sampled-jump heuristic for continuity.
  double jump = 0.0;
  for (Eigen::Index i = 0; i < values.rows(); ++i) {
    for (Eigen::Index k = 0; k < values.cols(); ++k) {
      jump = std::max(jump, std::abs(values(i, k) - values(i, (k + 1) % values.cols())));
      if (i + 1 < values.rows()) jump = std::max(jump, std::abs(values(i, k) - values(i + 1, k)));
    }
  }
  if (raw_sup > 0.0 && jump > 0.5 * raw_sup) {
    throw std::invalid_argument("SourceField: g appears discontinuous on the sampling grid");
  }
}

SourceField SourceField::zero() { return SourceField([](Complex) { return Complex{}; }, 0, true); }

SourceField SourceField::constant(Complex c) {
  if (c == Complex{}) return zero();
  return SourceField([c](Complex) { return c; });
}

JetNorms jet_norms(const WirtingerJet& jet) {
  const double a = std::abs(jet.f_z);
  const double b = std::abs(jet.f_zbar);
  return {a + b, std::abs(a - b), (a - b) * (a + b)};
}

Complex poisson_integral(const BoundaryData& boundary, const Point& z) {
  check_resolution(boundary, z);
  const auto& psi = boundary.samples();
  Complex sum{};
  for (Eigen::Index k = 0; k < psi.size(); ++k) {
    sum += unchecked::poisson(z.value(), std::polar(1.0, boundary.angle(static_cast<std::size_t>(k)))) * psi(k);
  }
  return sum / static_cast<double>(psi.size());
}

WirtingerJet poisson_integral_jet(const BoundaryData& boundary, const Point& z) {
  check_resolution(boundary, z);
  const auto& psi = boundary.samples();
  WirtingerJet jet;
  for (Eigen::Index k = 0; k < psi.size(); ++k) {
    const Complex unit = std::polar(1.0, boundary.angle(static_cast<std::size_t>(k)));
    jet.f += unchecked::poisson(z.value(), unit) * psi(k);
    jet.f_z += unchecked::scaled_poisson_dw(z.value(), 1.0, unit) * psi(k);
    jet.f_zbar += unchecked::scaled_poisson_dwbar(z.value(), 1.0, unit) * psi(k);
  }
  const double n = static_cast<double>(psi.size());
  return {jet.f / n, jet.f_z / n, jet.f_zbar / n};
}

Complex green_potential(const SourceField& source, const Point& z, const AreaQuadrature& quadrature) {
  check_area_quadrature(quadrature);
  if (source.is_zero()) return {};
  auto evaluate = [&](const AreaQuadrature& q) {
    return polar_area_mean(z.value(), q, [&](Complex zeta, double rho, Complex) {
      const double green = 0.5 * std::log(std::norm(1.0 - z.value() * std::conj(zeta))) - std::log(rho);
      return rho * green * source(zeta);
    });
  };
  const Complex value = evaluate(quadrature);
  if (quadrature.refinement_check) check_refinement(value, evaluate(halved(quadrature)), quadrature);
  return value;
}

WirtingerJet green_potential_jet(const SourceField& source, const Point& z, const AreaQuadrature& quadrature) {
  check_area_quadrature(quadrature);
  if (source.is_zero()) return {};
  const WirtingerJet jet = green_jet_about(z.value(), quadrature, source.function());
  if (quadrature.refinement_check) {
    const WirtingerJet coarse = green_jet_about(z.value(), halved(quadrature), source.function());
    check_refinement(jet.f, coarse.f, quadrature);
    check_refinement(jet.f_z, coarse.f_z, quadrature);
    check_refinement(jet.f_zbar, coarse.f_zbar, quadrature);
  }
  return jet;
}

PoissonSolution::PoissonSolution(BoundaryData boundary, SourceField source, AreaQuadrature quadrature)
    : boundary_(std::move(boundary)), source_(std::move(source)), quadrature_(quadrature) {
  check_area_quadrature(quadrature_);
}

double PoissonSolution::admissible_radius() const {
  return 1.0 - kResolutionFactor / static_cast<double>(boundary_.size());
}

Complex solve(const PoissonSolution& solution, const Point& z) {
  return poisson_integral(solution.boundary(), z) - green_potential(solution.source(), z, solution.quadrature());
}

WirtingerJet wirtinger_jet(const PoissonSolution& solution, const Point& z) {
  const WirtingerJet harmonic = poisson_integral_jet(solution.boundary(), z);
  const WirtingerJet potential = green_potential_jet(solution.source(), z, solution.quadrature());
  return {harmonic.f - potential.f, harmonic.f_z - potential.f_z, harmonic.f_zbar - potential.f_zbar};
}

WirtingerJet subdisk_jet(const ComplexField& f, const SourceField& source, const Point& a, double r, const Point& w,
                         std::size_t circle_nodes, const AreaQuadrature& quadrature) {
  if (!(r > 0.0) || r > a.boundary_distance()) {
    throw DomainError("subdisk_jet: radius must lie in (0, 1 - |a|]");
  }
  if (circle_nodes == 0) throw std::invalid_argument("subdisk_jet: need at least one circle node");
  check_area_quadrature(quadrature);
  const Complex u = detail::subdisk_offset(w, a, r);
  const Complex center = a.value();
  const Complex f_center = f(center);

  Complex harmonic{}, harmonic_dw{}, harmonic_dwbar{};
  for (std::size_t k = 0; k < circle_nodes; ++k) {
    const Complex unit = std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(circle_nodes));
    const Complex trace = f(center + r * unit) - f_center;
    harmonic += unchecked::poisson(u / r, unit) * trace;
    harmonic_dw += unchecked::scaled_poisson_dw(u, r, unit) * trace;
    harmonic_dwbar += unchecked::scaled_poisson_dwbar(u, r, unit) * trace;
  }
  const double n = static_cast<double>(circle_nodes);
  harmonic /= n;
  harmonic_dw /= n;
  harmonic_dwbar /= n;

  WirtingerJet potential;
  if (!source.is_zero()) {
    // G-potential of zeta -> g(r zeta + a) about u/r; d/dw = (1/r) d/dxi.
    potential = green_jet_about(u / r, quadrature, [&](Complex zeta) { return source(r * zeta + center); });
  }
  return {f_center + harmonic - r * r * potential.f, harmonic_dw - r * potential.f_z,
          harmonic_dwbar - r * potential.f_zbar};
}

double laplacian_residual(const PoissonSolution& solution, const Point& z, double h) {
  if (!(h > 0.0) || !(z.modulus() + h < 1.0)) {
    throw DomainError("laplacian_residual: five-point stencil leaves the disk");
  }
  const Complex c = z.value();
  auto at = [&](Complex p) { return solve(solution, Point::interior(p)); };
  const Complex lap = (at(c + h) + at(c - h) + at(c + Complex(0, h)) + at(c - Complex(0, h)) - 4.0 * at(c)) / (h * h);
  return std::abs(lap - solution.source()(c));
}

}  // namespace diskpoisson
