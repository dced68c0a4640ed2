#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "diskpoisson/analysis.hpp"
#include "diskpoisson/errors.hpp"
#include "diskpoisson/quadrature.hpp"

namespace diskpoisson {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double distance(Complex z) { return 1.0 - std::abs(z); }

// Distance from z to the edge of the region where the map may be evaluated.
double available_distance(const MappingHandle& m, Complex z) {
  return (m.boundary_regular() ? 1.0 : m.max_radius()) - std::abs(z);
}

double sharpness_scale(const Tolerances& tol, double rhs) { return tol.sharpness * std::max(1.0, std::abs(rhs)); }

void check_weight_exponent(double alpha, const char* who) {
  if (!(alpha >= 1.0 && alpha < 2.0)) {
    std::ostringstream msg;
    msg << who << ": alpha must lie in [1, 2), got " << alpha;
    throw DomainError(msg.str());
  }
}

// Worst (smallest margin) case among sampled inequalities lhs <= rhs.
struct WorstCase {
  double lhs = 0.0;
  double rhs = 0.0;
  Complex z{};
  double r = 0.0;
  std::size_t cases = 0;
  std::size_t failures = 0;
  bool any = false;

  void add(double l, double rr, Complex at, double radius, double tolerance) {
    ++cases;
    if (rr - l < -tolerance) ++failures;
    if (!any || rr - l < rhs - lhs) {
      lhs = l;
      rhs = rr;
      z = at;
      r = radius;
      any = true;
    }
  }
};

NumericRecord worst_case_constants(const WorstCase& w) {
  return {{"cases", static_cast<double>(w.cases)},
          {"failures", static_cast<double>(w.failures)},
          {"worst_z_re", w.z.real()},
          {"worst_z_im", w.z.imag()},
          {"worst_r", w.r}};
}

}  // namespace

VerificationReport verify_thm1_necessity(const MappingHandle& m, double lip_constant, const Majorant& omega,
                                         const DiskGrid& grid, const Tolerances& tol) {
  if (grid.boundary_levels < 2) throw std::invalid_argument("verify_thm1_necessity: need two boundary levels");
  const double constant = derivative_constant(m, omega, grid);
  DiskGrid coarser = grid;
  coarser.boundary_levels -= 1;
  const double previous = derivative_constant(m, omega, coarser);
  const double growth = previous > 0.0 ? constant / previous : 1.0;
  const bool bounded = growth <= 1.05;

  const double g_sup = m.source().sup_norm();
  const double rhs = 40.0 * lip_constant + g_sup / (6.0 * omega(1.0));
  VerificationReport report =
      make_report("thm1-necessity", m.label(), constant, rhs, absolute_tolerance(m, tol), sharpness_scale(tol, rhs),
                  {{"boundary_levels", static_cast<double>(grid.boundary_levels)},
                   {"angles", static_cast<double>(grid.angles)}},
                  {{"derivative_constant", constant},
                   {"lipschitz_constant", lip_constant},
                   {"previous_level_constant", previous},
                   {"growth", growth},
                   {"bounded", bounded ? 1.0 : 0.0},
                   {"source_sup", g_sup}},
                  {{"omega", omega.label()}});
  report.holds = report.holds && bounded;
  return report;
}

VerificationReport verify_thm1_sufficiency(const MappingHandle& m, double deriv_constant, const Majorant& omega,
                                           std::span<const PointPair> pairs, const Tolerances& tol) {
  const double tolerance = absolute_tolerance(m, tol);
  const GaussRule& rule = gauss_legendre(32);
  double lhs = 0.0, path_constant = 0.0;
  std::size_t violations = 0, used = 0;
  for (const auto& [z, w] : pairs) {
    const double length = std::abs(z - w);
    if (length == 0.0) continue;
    ++used;
    const double jump = std::abs(m.value(z) - m.value(w));
    double path = 0.0;
    for (Eigen::Index j = 0; j < rule.nodes.size(); ++j) {
      const double s = 0.5 * (rule.nodes(j) + 1.0);
      path += 0.5 * rule.weights(j) * jet_norms(m.jet(z + s * (w - z))).op_norm;
    }
    path *= length;
    if (jump > path * (1.0 + 1e-9) + tolerance) ++violations;
    const double scale = omega(length);
    lhs = std::max(lhs, jump / scale);
    path_constant = std::max(path_constant, path / scale);
  }
  const CurveCondition curve = curve_condition_constant(omega, pairs);
  const double rhs = deriv_constant * curve.constant;
  VerificationReport report = make_report(
      "thm1-sufficiency", m.label(), lhs, rhs, tolerance, sharpness_scale(tol, rhs),
      {{"pairs", static_cast<double>(used)}},
      {{"path_constant", path_constant},
       {"derivative_constant", deriv_constant},
       {"curve_constant", curve.constant},
       {"segment_curve_constant", curve.segment_constant},
       {"path_violations", static_cast<double>(violations)}},
      {{"omega", omega.label()}});
  report.holds = report.holds && violations == 0;
  return report;
}

VerificationReport verify_lemma22(const MappingHandle& m, Complex a, double r, const Tolerances& tol,
                                  std::size_t circle_nodes) {
  if (!(r > 0.0 && r < distance(a))) {
    std::ostringstream msg;
    msg << "verify_lemma22: radius " << r << " must lie in (0, 1 - |a|) with 1 - |a| = " << distance(a);
    throw DomainError(msg.str());
  }
  const Complex center = m.value(a);
  const double mean = periodic_mean<double>([&](double t) { return std::abs(m.value(a + std::polar(r, t)) - center); },
                                            circle_nodes);
  const double circle_term = 2.0 * mean / r;
  const double g_sup = m.source().sup_norm();
  const double source_term = 2.0 * g_sup * r / 3.0;
  const double lhs = jet_norms(m.jet(a)).op_norm;
  const double rhs = circle_term + source_term;

  // The same derivative rebuilt from the disk D(a, r) alone.
  const WirtingerJet local = subdisk_jet([&](Complex w) { return m.value(w); }, m.source(), Point::interior(a), r,
                                         Point::interior(a), circle_nodes);
  const double local_norm = jet_norms(local).op_norm;
  return make_report("lem22-derivative", m.label(), lhs, rhs, absolute_tolerance(m, tol), sharpness_scale(tol, rhs),
                     {{"a_re", a.real()}, {"a_im", a.imag()}, {"r", r}},
                     {{"circle_term", circle_term},
                      {"source_term", source_term},
                      {"subdisk_norm", local_norm},
                      {"subdisk_gap", std::abs(local_norm - lhs)}});
}

VerificationReport verify_lemma21(const SourceField& source, const std::string& label,
                                  const GreenDerivativeGrid& grid, double tolerance) {
  std::vector<double> radii;
  for (std::size_t i = 0; i < grid.uniform_radii; ++i) {
    radii.push_back(static_cast<double>(i) / static_cast<double>(grid.uniform_radii));
  }
  for (std::size_t k = 1; k <= grid.boundary_levels; ++k) radii.push_back(1.0 - std::pow(10.0, -static_cast<int>(k)));
  std::sort(radii.begin(), radii.end());
  radii.erase(std::unique(radii.begin(), radii.end()), radii.end());

  double sup_dz = 0.0, sup_dzbar = 0.0;
  Complex argmax{};
  for (const double rho : radii) {
    const std::size_t count = rho == 0.0 ? 1 : grid.angles;
    for (std::size_t k = 0; k < count; ++k) {
      const Complex z = std::polar(rho, kTwoPi * static_cast<double>(k) / static_cast<double>(grid.angles));
      const WirtingerJet jet = green_potential_jet(source, Point::interior(z), grid.quadrature);
      if (std::abs(jet.f_z) > sup_dz) argmax = z;
      sup_dz = std::max(sup_dz, std::abs(jet.f_z));
      sup_dzbar = std::max(sup_dzbar, std::abs(jet.f_zbar));
    }
  }
  const double rhs = source.sup_norm() / 3.0;
  const double lhs = std::max(sup_dz, sup_dzbar);
  return make_report("lem21-green-derivative", label, lhs, rhs, tolerance, 1e-6 * std::max(1.0, rhs),
                     {{"radii", static_cast<double>(radii.size())},
                      {"angles", static_cast<double>(grid.angles)},
                      {"radial_nodes", static_cast<double>(grid.quadrature.radial_nodes)},
                      {"angular_nodes", static_cast<double>(grid.quadrature.angular_nodes)}},
                     {{"sup_dz", sup_dz},
                      {"sup_dzbar", sup_dzbar},
                      {"source_sup", source.sup_norm()},
                      {"argmax_re", argmax.real()},
                      {"argmax_im", argmax.imag()}});
}

std::vector<VerificationReport> verify_thm3(const MappingHandle& m, std::size_t n_max, const Tolerances& tol,
                                            std::size_t boundary_nodes) {
  const MapMeasurements meas = measure_map(m, tol);
  if (!std::isfinite(meas.K) || !std::isfinite(meas.perimeter)) {
    throw std::invalid_argument("verify_thm3: K and l_f(1) must be finite");
  }
  const BoundaryData trace = m.boundary_trace(boundary_nodes);
  const CoefficientSpectrum spectrum = harmonic_coefficients(trace, trace.size() / 2 - 1);
  if (n_max > spectrum.n_max()) throw std::invalid_argument("verify_thm3: n_max exceeds the boundary resolution");
  const double tolerance = absolute_tolerance(m, tol);
  const double g = meas.source_sup;
  const double ell = meas.perimeter;

  std::vector<VerificationReport> reports;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto i = static_cast<Eigen::Index>(n);
    const double dn = static_cast<double>(n);
    const double lhs = std::abs(spectrum.a(i)) + std::abs(spectrum.b(i));
    const double rhs = meas.K * ell / (kTwoPi * dn) + 2.0 * g / (3.0 * dn);
    reports.push_back(make_report("thm3-coefficient", m.label(), lhs, rhs, tolerance, sharpness_scale(tol, rhs),
                                  {{"n", dn}},
                                  {{"abs_a", std::abs(spectrum.a(i))},
                                   {"abs_b", std::abs(spectrum.b(i))},
                                   {"K", meas.K},
                                   {"K_exact", meas.K_exact ? 1.0 : 0.0},
                                   {"perimeter", ell},
                                   {"source_sup", g},
                                   {"aliasing", spectrum.aliasing ? 1.0 : 0.0}}));
  }

  const HarmonicSeries series(spectrum);
  double lhs = 0.0;
  Complex argmax{};
  constexpr std::size_t radii = 32, angles = 64;
  for (std::size_t i = 0; i < radii; ++i) {
    const double rho = static_cast<double>(i) / static_cast<double>(radii);
    const std::size_t count = i == 0 ? 1 : angles;
    for (std::size_t k = 0; k < count; ++k) {
      const Complex z = std::polar(rho, kTwoPi * static_cast<double>(k) / static_cast<double>(angles));
      const double value = jet_norms(series.jet(z)).op_norm * (1.0 - rho * rho);
      if (value > lhs) {
        lhs = value;
        argmax = z;
      }
    }
  }
  const double rhs = std::sqrt(ell * ell * meas.K / (4.0 * kPi * kPi) + 4.0 * g * g / 9.0 +
                               ell * std::sqrt(meas.K) * g / (3.0 * kPi));
  reports.push_back(make_report("thm3-derivative", m.label(), lhs, rhs, tolerance, sharpness_scale(tol, rhs),
                                {{"radii", static_cast<double>(radii)}, {"angles", static_cast<double>(angles)}},
                                {{"K", meas.K},
                                 {"perimeter", ell},
                                 {"source_sup", g},
                                 {"series_terms", static_cast<double>(series.terms())},
                                 {"argmax_re", argmax.real()},
                                 {"argmax_im", argmax.imag()}}));
  return reports;
}

std::vector<VerificationReport> verify_thm4(const MappingHandle& m, std::size_t n_max, const Tolerances& tol,
                                            std::size_t boundary_nodes) {
  const MapMeasurements meas = measure_map(m, tol);
  if (!std::isfinite(meas.radial_sup)) throw std::invalid_argument("verify_thm4: M must be finite");
  const BoundaryData trace = m.boundary_trace(boundary_nodes);
  const CoefficientSpectrum spectrum = harmonic_coefficients(trace, trace.size() / 2 - 1);
  if (n_max > spectrum.n_max()) throw std::invalid_argument("verify_thm4: n_max exceeds the boundary resolution");
  const double tolerance = absolute_tolerance(m, tol);
  const double rhs = meas.K * meas.radial_sup + 2.0 * meas.source_sup / 3.0;

  std::vector<VerificationReport> reports;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto i = static_cast<Eigen::Index>(n);
    const double lhs = std::abs(spectrum.a(i)) + std::abs(spectrum.b(i));
    reports.push_back(make_report("thm4-coefficient", m.label(), lhs, rhs, tolerance, sharpness_scale(tol, rhs),
                                  {{"n", static_cast<double>(n)}},
                                  {{"abs_a", std::abs(spectrum.a(i))},
                                   {"abs_b", std::abs(spectrum.b(i))},
                                   {"K", meas.K},
                                   {"K_exact", meas.K_exact ? 1.0 : 0.0},
                                   {"radial_sup", meas.radial_sup},
                                   {"source_sup", meas.source_sup}}));
  }
  return reports;
}

std::vector<Complex> oscillation_sample_points(double max_radius, std::size_t count) {
  if (count == 0) throw std::invalid_argument("oscillation_sample_points: count must be positive");
  const auto rings = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(count))));
  const std::size_t per_ring = (count + rings - 1) / rings;
  std::vector<Complex> points;
  for (std::size_t i = 0; i < rings && points.size() < count; ++i) {
    const double rho = max_radius * (static_cast<double>(i) + 0.5) / static_cast<double>(rings);
    for (std::size_t k = 0; k < per_ring && points.size() < count; ++k) {
      const double t = kTwoPi * (static_cast<double>(k) + 0.5 * static_cast<double>(i % 2)) /
                       static_cast<double>(per_ring);
      points.push_back(std::polar(rho, t));
    }
  }
  return points;
}

double oscillation_constant(const MappingHandle& m, const BlochParams& p, std::span<const Complex> points) {
  double best = 0.0;
  for (const Complex z : points) {
    const double reach = available_distance(m, z);
    for (const double fraction : kOscillationRadii) {
      const double r = fraction * reach;
      best = std::max(best, mean_oscillation(m, z, r) * p.omega(std::pow(r, p.alpha)) / r);
    }
  }
  return best;
}

VerificationReport verify_thm2_forward(const MappingHandle& m, const BlochParams& p, double osc_constant,
                                       std::span<const Complex> points, const Tolerances& tol) {
  check_weight_exponent(p.alpha, "verify_thm2_forward");
  const double tolerance = absolute_tolerance(m, tol);
  const double g_sup = m.source().sup_norm();
  WorstCase worst;
  for (const Complex z : points) {
    const double reach = available_distance(m, z);
    const double norm = jet_norms(m.jet(z)).op_norm;
    for (const double fraction : kOscillationRadii) {
      const double r = fraction * reach;
      worst.add(norm, 3.0 * osc_constant / p.omega(std::pow(r, p.alpha)) + 0.5 * g_sup * r, z, r, tolerance);
    }
  }
  NumericRecord constants = worst_case_constants(worst);
  constants.insert(constants.begin(), {"oscillation_constant", osc_constant});
  VerificationReport report =
      make_report("thm2-forward", m.label(), worst.lhs, worst.rhs, tolerance, sharpness_scale(tol, worst.rhs),
                  {{"alpha", p.alpha}, {"points", static_cast<double>(points.size())}}, std::move(constants),
                  {{"omega", p.omega.label()}});
  report.holds = report.holds && worst.failures == 0;
  return report;
}

VerificationReport verify_thm2_reverse(const MappingHandle& m, const BlochParams& p, double bloch_const,
                                       std::span<const Complex> points, const Tolerances& tol) {
  check_weight_exponent(p.alpha, "verify_thm2_reverse");
  const double tolerance = absolute_tolerance(m, tol);
  WorstCase worst;
  for (const Complex z : points) {
    const double reach = available_distance(m, z);
    for (const double fraction : kOscillationRadii) {
      const double r = fraction * reach;
      const double bound = 2.0 * bloch_const / (2.0 - p.alpha) * r / p.omega(std::pow(r, p.alpha));
      worst.add(mean_oscillation(m, z, r), bound, z, r, tolerance);
    }
  }
  NumericRecord constants = worst_case_constants(worst);
  constants.insert(constants.begin(), {"bloch_constant", bloch_const});
  VerificationReport report =
      make_report("thm2-reverse", m.label(), worst.lhs, worst.rhs, tolerance, sharpness_scale(tol, worst.rhs),
                  {{"alpha", p.alpha}, {"points", static_cast<double>(points.size())}}, std::move(constants),
                  {{"omega", p.omega.label()}});
  report.holds = report.holds && worst.failures == 0;
  return report;
}

std::vector<VerificationReport> verify_schwarz(const MappingHandle& m, const Tolerances& tol,
                                               std::size_t boundary_nodes) {
  const MapMeasurements meas = measure_map(m, tol);
  const BoundaryData trace = m.boundary_trace(boundary_nodes);
  const HarmonicSeries series(harmonic_coefficients(trace, trace.size() / 2 - 1));
  const double tolerance = absolute_tolerance(m, tol);
  const double scale = meas.K * meas.radial_sup + 2.0 * meas.source_sup / 3.0;
  if (!(scale > 0.0)) throw std::invalid_argument("verify_schwarz: K M + (2/3)||g|| must be positive");

  constexpr std::size_t radii = 32, angles = 64;
  std::vector<double> r_grid(radii), t_grid(angles);
  for (std::size_t i = 0; i < radii; ++i) r_grid[i] = static_cast<double>(i + 1) / static_cast<double>(radii);
  for (std::size_t k = 0; k < angles; ++k) t_grid[k] = kTwoPi * static_cast<double>(k) / static_cast<double>(angles);

  auto derivative = [&](Complex z) { return jet_norms(series.jet(z)).op_norm; };
  const std::vector<double> raw = radial_profile(derivative, r_grid, t_grid);

  double hypothesis = 0.0;
  WorstCase normalized, chain;
  for (std::size_t i = 0; i < radii; ++i) {
    const double a = raw[i] / scale;
    hypothesis = std::max(hypothesis, a);
    normalized.add(a, r_grid[i], 0.0, r_grid[i], tolerance);
    chain.add(raw[i], meas.K * meas.radial_sup + 2.0 * meas.source_sup * r_grid[i] / 3.0, 0.0, r_grid[i], tolerance);
  }
  const NumericRecord grid_inputs{{"radii", static_cast<double>(radii)}, {"angles", static_cast<double>(angles)}};
  std::vector<VerificationReport> reports;
  reports.push_back(make_report("schwarz-radial", m.label(), normalized.lhs, normalized.rhs, tolerance,
                                sharpness_scale(tol, normalized.rhs), grid_inputs,
                                {{"worst_r", normalized.r},
                                 {"hypothesis_max", hypothesis},
                                 {"hypothesis_holds", hypothesis <= 1.0 + tolerance ? 1.0 : 0.0},
                                 {"normalizer", scale},
                                 {"K", meas.K},
                                 {"radial_sup", meas.radial_sup},
                                 {"source_sup", meas.source_sup}}));
  reports.push_back(make_report("schwarz-chain", m.label(), chain.lhs, chain.rhs, tolerance,
                                sharpness_scale(tol, chain.rhs), grid_inputs,
                                {{"worst_r", chain.r}, {"K", meas.K}, {"radial_sup", meas.radial_sup}}));
  reports.back().holds = reports.back().holds && chain.failures == 0;
  reports.front().holds = reports.front().holds && normalized.failures == 0;
  return reports;
}

VerificationReport verify_isoperimetric(const MappingHandle& m, const Tolerances& tol) {
  const IsoperimetricResult iso = isoperimetric_check(m, 0.0);
  const double scale = std::max(1.0, iso.bound);
  return make_report("isoperimetric", m.label(), iso.area, iso.bound, absolute_tolerance(m, tol) * scale,
                     tol.sharpness * scale, {{"radius", m.max_radius()}}, {{"perimeter", iso.perimeter}});
}

}  // namespace diskpoisson
