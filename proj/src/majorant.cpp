#include "diskpoisson/majorant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "diskpoisson/quadrature.hpp"

namespace diskpoisson {

Majorant::Majorant(std::string label, Function fn, std::optional<double> alpha)
    : label_(std::move(label)), fn_(std::move(fn)), alpha_(alpha) {
  if (!fn_) throw std::invalid_argument("Majorant: empty function");
}

Majorant Majorant::power(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("Majorant::power: alpha must lie in (0, 1]");
  std::ostringstream label;
  label << "t^" << alpha;
  if (alpha == 1.0) return Majorant("t", [](double t) { return t; }, 1.0);
  return Majorant(label.str(), [alpha](double t) { return std::pow(t, alpha); }, alpha);
}

AxiomCheck check_majorant_axioms(const Majorant& omega, std::span<const double> grid) {
  if (grid.empty()) throw std::invalid_argument("check_majorant_axioms: empty grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw std::invalid_argument("check_majorant_axioms: grid must be positive");
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw std::invalid_argument("check_majorant_axioms: grid must be strictly increasing");
    }
  }
  constexpr double rel = 1e-12;
  if (std::abs(omega(0.0)) > 0.0) return {false, std::nullopt, "omega(0) != 0"};
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double a = omega(grid[i]);
    const double b = omega(grid[i + 1]);
    if (!std::isfinite(a) || a < 0.0) return {false, i, "omega is negative or not finite"};
    if (b < a * (1.0 - rel)) return {false, i, "omega decreases"};
    const double ra = a / grid[i];
    const double rb = b / grid[i + 1];
    if (rb > ra * (1.0 + rel)) return {false, i, "omega(t)/t increases"};
  }
  return {};
}

namespace {

// d log omega / d log t at t, by a centered difference of width one in log t.
double elasticity(const Majorant& omega, double t) {
  const double hi = omega(t * std::exp(0.5));
  const double lo = omega(t * std::exp(-0.5));
  if (!(hi > 0.0) || !(lo > 0.0)) return 0.0;
  return std::log(hi) - std::log(lo);
}

struct Integral {
  double value;
  bool divergent;
};

// int_0^delta omega(t)/t dt = int_0^inf omega(delta e^-u) du, truncated at
// t_min = lower * delta with a power-law tail extrapolated from the local elasticity.
Integral lower_integral(const Majorant& omega, double delta, const RegularityOptions& opt) {
  const double span = -std::log(opt.lower_truncation);
  const auto body = integrate_adaptive([&](double u) { return omega(delta * std::exp(-u)); }, 0.0, span,
                                       opt.quadrature_tolerance);
  const double t_min = delta * opt.lower_truncation;
  const double edge = omega(t_min);
  if (edge == 0.0) return {body.value, !body.converged};
  const double e = elasticity(omega, t_min);
  if (e <= 1e-6) return {std::numeric_limits<double>::infinity(), true};
  return {body.value + edge / e, !body.converged};
}

// delta int_delta^inf omega(t)/t^2 dt = int_0^inf omega(delta e^u) e^-u du,
// truncated at t = T with the same kind of tail extrapolation.
Integral upper_integral(const Majorant& omega, double delta, double upper, const RegularityOptions& opt) {
  const double span = std::log(upper / delta);
  const auto body = integrate_adaptive([&](double u) { return omega(delta * std::exp(u)) * std::exp(-u); }, 0.0,
                                       span, opt.quadrature_tolerance);
  const double decay = 1.0 - elasticity(omega, upper);
  if (decay <= 1e-6) return {std::numeric_limits<double>::infinity(), true};
  const double edge = omega(upper) * delta / upper;
  return {body.value + edge / decay, !body.converged};
}

RegularityCondition summarize(const std::vector<double>& deltas, const std::vector<double>& constants,
                              bool divergent, const RegularityOptions& opt) {
  RegularityCondition out;
  out.divergent = divergent;
  if (divergent) {
    out.constant_estimate = std::numeric_limits<double>::infinity();
    out.holds = false;
    return out;
  }
  out.constant_estimate = *std::max_element(constants.begin(), constants.end());
  // Growth test between the smallest two decades of the grid.
  const double smallest = deltas.front();
  double last = 0.0, previous = 0.0;
  bool have_previous = false;
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    if (deltas[k] < 10.0 * smallest) {
      last = std::max(last, constants[k]);
    } else if (deltas[k] < 100.0 * smallest) {
      previous = std::max(previous, constants[k]);
      have_previous = true;
    }
  }
  out.holds = !have_previous || last <= opt.growth_tolerance * previous;
  return out;
}

}  // namespace

RegularityReport check_regularity(const Majorant& omega, double delta0, const RegularityOptions& options) {
  if (!(delta0 > 0.0)) throw std::invalid_argument("check_regularity: delta0 must be positive");
  if (options.delta_samples < 2) throw std::invalid_argument("check_regularity: need at least two samples");

  const std::size_t n = options.delta_samples;
  const double upper = options.truncation_factor * delta0;
  std::vector<double> deltas(n), c16(n), c17(n);
  bool div16 = false, div17 = false;
  for (std::size_t k = 0; k < n; ++k) {
    const double exponent = -options.decades * (1.0 - static_cast<double>(k) / static_cast<double>(n));
    const double delta = delta0 * std::pow(10.0, exponent);
    deltas[k] = delta;
    const double scale = omega(delta);
    const Integral lo = lower_integral(omega, delta, options);
    const Integral hi = upper_integral(omega, delta, upper, options);
    div16 = div16 || lo.divergent;
    div17 = div17 || hi.divergent;
    c16[k] = lo.value / scale;
    c17[k] = hi.value / scale;
  }

  RegularityReport report;
  report.delta0 = delta0;
  report.samples = n;
  report.small_scale = summarize(deltas, c16, div16, options);
  report.large_scale = summarize(deltas, c17, div17, options);
  return report;
}

}  // namespace diskpoisson
