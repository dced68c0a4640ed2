#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "diskpoisson/analysis.hpp"

namespace diskpoisson {

enum class Suite { thm1, thm2, thm3, thm4, lem21, lem22, isoperimetric, schwarz, all };

/// Throws std::invalid_argument on unknown names.
Suite parse_suite(std::string_view name);
std::string_view suite_name(Suite suite);

struct SuiteOptions {
  Tolerances tolerances{};
  PairSampling pairs{};
  /// Coefficient bounds are checked for n = 1..n_max.
  std::size_t n_max = 32;
  std::size_t boundary_nodes = kDefaultBoundaryNodes;
  AreaQuadrature quadrature{};
};

/// Runs one suite (or all of them, in declaration order) on a mapping.
/// Report order depends only on the suite and the options.
std::vector<VerificationReport> run_suite(const MappingHandle& m, Suite suite, const SuiteOptions& options = {});

}  // namespace diskpoisson
