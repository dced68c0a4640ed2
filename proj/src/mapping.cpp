#include "diskpoisson/mapping.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "diskpoisson/errors.hpp"

namespace diskpoisson {

MappingHandle::MappingHandle(std::string label, ValueFunction value, JetFunction jet, SourceField source,
                             TraceFunction trace, Traits traits)
    : label_(std::move(label)),
      value_(std::move(value)),
      jet_(std::move(jet)),
      source_(std::move(source)),
      trace_(std::move(trace)),
      traits_(traits) {
  if (!value_ || !jet_ || !trace_) throw std::invalid_argument("MappingHandle: every function must be set");
  if (!(traits_.max_radius > 0.0 && traits_.max_radius <= 1.0)) {
    throw std::invalid_argument("MappingHandle: max_radius must lie in (0, 1]");
  }
}

MappingHandle MappingHandle::from_catalog(const CatalogMap& map) {
  Traits traits;
  traits.max_radius = 1.0;
  traits.boundary_regular = true;
  traits.exact_K = map.exact_K();
  SourceField source = map.harmonic() ? SourceField::zero() : SourceField(map.source_function());
  return MappingHandle(
      map.label(), [map](Complex z) { return map.value(z); }, [map](Complex z) { return map.jet(z); },
      std::move(source),
      [map](std::size_t n) {
        return BoundaryData::sample([&](double t) { return map.value(std::polar(1.0, t)); }, n);
      },
      traits);
}

MappingHandle MappingHandle::from_solution(std::shared_ptr<const PoissonSolution> solution, std::string label) {
  if (!solution) throw std::invalid_argument("MappingHandle::from_solution: null solution");
  Traits traits;
  traits.max_radius = solution->admissible_radius();
  traits.solver_backed = true;
  SourceField source = solution->source();
  return MappingHandle(
      std::move(label), [solution](Complex z) { return solve(*solution, Point::interior(z)); },
      [solution](Complex z) { return wirtinger_jet(*solution, Point::interior(z)); }, std::move(source),
      [solution](std::size_t) { return solution->boundary(); }, traits);
}

void MappingHandle::check_radius(Complex z) const {
  const double modulus = std::abs(z);
  if (modulus <= traits_.max_radius * (1.0 + 1e-12)) return;
  std::ostringstream msg;
  msg << "mapping '" << label_ << "' is not available at |z| = " << modulus << " (limit " << traits_.max_radius
      << ")";
  if (traits_.solver_backed) throw ResolutionError(msg.str());
  throw DomainError(msg.str());
}

Complex MappingHandle::value(Complex z) const {
  check_radius(z);
  return value_(z);
}

WirtingerJet MappingHandle::jet(Complex z) const {
  check_radius(z);
  return jet_(z);
}

}  // namespace diskpoisson
