#include "diskpoisson/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace diskpoisson {
namespace {

constexpr std::array<std::pair<Suite, std::string_view>, 9> kSuiteNames{{
    {Suite::thm1, "thm1"},
    {Suite::thm2, "thm2"},
    {Suite::thm3, "thm3"},
    {Suite::thm4, "thm4"},
    {Suite::lem21, "lem21"},
    {Suite::lem22, "lem22"},
    {Suite::isoperimetric, "isoperimetric"},
    {Suite::schwarz, "schwarz"},
    {Suite::all, "all"},
}};

void append(std::vector<VerificationReport>& out, std::vector<VerificationReport> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

std::vector<VerificationReport> lipschitz_suite(const MappingHandle& m, const SuiteOptions& opt) {
  const auto& tol = opt.tolerances;
  const auto pairs = sample_pairs(m.max_radius(), opt.pairs);
  std::vector<VerificationReport> out;
  for (const Majorant& omega : {Majorant::linear(), Majorant::power(0.5)}) {
    const double lip = lipschitz_constant(m, omega, pairs) * tol.sup_inflation;
    out.push_back(verify_thm1_necessity(m, lip, omega, {}, tol));
    const double deriv = derivative_constant(m, omega) * tol.sup_inflation;
    out.push_back(verify_thm1_sufficiency(m, deriv, omega, pairs, tol));
  }
  return out;
}

std::vector<VerificationReport> oscillation_suite(const MappingHandle& m, const SuiteOptions& opt) {
  const auto& tol = opt.tolerances;
  const auto points = oscillation_sample_points(m.max_radius());
  std::vector<VerificationReport> out;
  for (const double alpha : {1.0, 1.5}) {
    BlochParams p;
    p.alpha = alpha;
    const double osc = oscillation_constant(m, p, points) * tol.sup_inflation;
    out.push_back(verify_thm2_forward(m, p, osc, points, tol));
    const double bloch = bloch_constant(m, p) * tol.sup_inflation;
    out.push_back(verify_thm2_reverse(m, p, bloch, points, tol));
  }
  return out;
}

VerificationReport local_derivative_suite(const MappingHandle& m, const SuiteOptions& opt) {
  const double edge = m.boundary_regular() ? 1.0 : m.max_radius();
  std::vector<Complex> centres{Complex{}};
  for (const double fraction : {0.3, 0.6, 0.9}) {
    for (int k = 0; k < 8; ++k) centres.push_back(std::polar(fraction * m.max_radius(), std::numbers::pi * k / 4.0));
  }
  std::optional<VerificationReport> worst;
  std::size_t cases = 0, failures = 0;
  for (const Complex a : centres) {
    const double reach = edge - std::abs(a);
    for (const double factor : {0.2, 0.6, 1.0}) {
      const double r = std::min(factor * reach, 0.999 * (1.0 - std::abs(a)));
      VerificationReport report = verify_lemma22(m, a, r, opt.tolerances);
      ++cases;
      if (!report.holds) ++failures;
      if (!worst || report.margin < worst->margin) worst = std::move(report);
    }
  }
  worst->constants.emplace_back("cases", static_cast<double>(cases));
  worst->constants.emplace_back("failures", static_cast<double>(failures));
  worst->holds = failures == 0;
  return *worst;
}

}  // namespace

Suite parse_suite(std::string_view name) {
  for (const auto& [suite, text] : kSuiteNames) {
    if (text == name) return suite;
  }
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string_view suite_name(Suite suite) {
  for (const auto& [s, text] : kSuiteNames) {
    if (s == suite) return text;
  }
  return "unknown";
}

std::vector<VerificationReport> run_suite(const MappingHandle& m, Suite suite, const SuiteOptions& opt) {
  const auto& tol = opt.tolerances;
  std::vector<VerificationReport> out;
  switch (suite) {
    case Suite::thm1:
      return lipschitz_suite(m, opt);
    case Suite::thm2:
      return oscillation_suite(m, opt);
    case Suite::thm3:
      return verify_thm3(m, opt.n_max, tol, opt.boundary_nodes);
    case Suite::thm4:
      return verify_thm4(m, opt.n_max, tol, opt.boundary_nodes);
    case Suite::lem21: {
      GreenDerivativeGrid grid;
      grid.quadrature = opt.quadrature;
      out.push_back(verify_lemma21(m.source(), m.label(), grid, absolute_tolerance(m, tol)));
      return out;
    }
    case Suite::lem22:
      out.push_back(local_derivative_suite(m, opt));
      return out;
    case Suite::isoperimetric:
      out.push_back(verify_isoperimetric(m, tol));
      return out;
    case Suite::schwarz:
      return verify_schwarz(m, tol, opt.boundary_nodes);
    case Suite::all:
      for (const auto& [s, name] : kSuiteNames) {
        if (s != Suite::all) append(out, run_suite(m, s, opt));
      }
      return out;
  }
  return out;
}

}  // namespace diskpoisson
