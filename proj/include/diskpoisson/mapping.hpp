#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "diskpoisson/catalog.hpp"
#include "diskpoisson/solver.hpp"

namespace diskpoisson {

/// Default number of boundary samples for Dirichlet data and boundary traces.
inline constexpr std::size_t kDefaultBoundaryNodes = 2048;

/// Type-erased mapping f on (part of) the closed disk: values, jets, the
/// source g = Delta f and the boundary trace. Backed either by a CatalogMap
/// (closed form, evaluable up to |z| = 1) or by a PoissonSolution (evaluable
/// up to its admissible radius).
class MappingHandle {
 public:
  using JetFunction = std::function<WirtingerJet(Complex)>;
  using ValueFunction = std::function<Complex(Complex)>;
  using TraceFunction = std::function<BoundaryData(std::size_t)>;

  struct Traits {
    /// Largest |z| at which jets may be requested.
    double max_radius = 1.0;
    /// Jets extend continuously to |z| = 1 and may be evaluated there.
    bool boundary_regular = false;
    bool solver_backed = false;
    std::optional<double> exact_K;
  };

  MappingHandle(std::string label, ValueFunction value, JetFunction jet, SourceField source, TraceFunction trace,
                Traits traits);

  static MappingHandle from_catalog(const CatalogMap& map);
  static MappingHandle from_solution(std::shared_ptr<const PoissonSolution> solution, std::string label);

  const std::string& label() const { return label_; }
  /// Throws DomainError (closed-form maps) or ResolutionError (solver-backed
  /// maps) when |z| exceeds max_radius.
  Complex value(Complex z) const;
  WirtingerJet jet(Complex z) const;
  const SourceField& source() const { return source_; }
  /// Samples of f on the unit circle. Solver-backed handles return the
  /// Dirichlet samples they were built from and ignore `n`.
  BoundaryData boundary_trace(std::size_t n = kDefaultBoundaryNodes) const { return trace_(n); }

  double max_radius() const { return traits_.max_radius; }
  bool boundary_regular() const { return traits_.boundary_regular; }
  bool solver_backed() const { return traits_.solver_backed; }
  std::optional<double> exact_K() const { return traits_.exact_K; }

 private:
  void check_radius(Complex z) const;

  std::string label_;
  ValueFunction value_;
  JetFunction jet_;
  SourceField source_;
  TraceFunction trace_;
  Traits traits_;
};

}  // namespace diskpoisson
