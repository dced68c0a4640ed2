#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "diskpoisson/mapping.hpp"
#include "diskpoisson/suites.hpp"

namespace diskpoisson::cli {

enum ExitCode : int { kAllHold = 0, kCheckFailed = 1, kInputError = 2 };

struct RunConfig {
  /// catalog, solve, measure or verify.
  std::string command;
  /// Catalog labels or `solver:<catalog label>`. Empty: the default catalog
  /// (verify) or the map described by psi/g.
  std::vector<std::string> maps;
  /// Dirichlet datum and source for a solver-backed map; see describe_specs().
  std::string psi;
  std::string g;

  std::string suite = "all";
  std::string functional = "perimeter";
  double r = 1.0;
  double theta = 0.0;
  double alpha = 1.0;
  double s = 0.0;
  std::string omega = "t";
  std::size_t n_max = 32;
  /// Evaluation points for `solve`, as "re,im".
  std::vector<std::string> points;

  std::string out;
  std::string format = "json";

  std::size_t boundary_nodes = kDefaultBoundaryNodes;
  std::size_t radial_nodes = 64;
  std::size_t angular_nodes = 128;
  std::uint64_t seed = 7;
  double tolerance = 1e-8;
  double solver_tolerance = 1e-4;
  double sharpness = 1e-6;
  double sup_inflation = 1.01;
};

/// Builds the mapping named by `label` under the resolutions of `config`.
/// Throws std::invalid_argument for unknown labels or malformed specs.
MappingHandle make_mapping(const std::string& label, const RunConfig& config);

/// Mapping described by config.psi and config.g.
MappingHandle make_spec_mapping(const RunConfig& config);

/// Help text for the psi and g spec grammars.
std::string describe_specs();

/// Executes a parsed configuration; returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses flags (and an optional --config file) and runs.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace diskpoisson::cli
