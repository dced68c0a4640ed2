#include "diskpoisson/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "diskpoisson/analysis.hpp"
#include "diskpoisson/catalog.hpp"
#include "diskpoisson/errors.hpp"
#include "diskpoisson/geometry.hpp"
#include "diskpoisson/majorant.hpp"

namespace diskpoisson::cli {
namespace {

using Json = nlohmann::ordered_json;

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

double parse_double(std::string_view text, std::string_view context) {
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw InputError("malformed number '" + std::string(text) + "' in " + std::string(context));
  }
  return value;
}

// "re" or "re<sep>im".
Complex parse_complex(std::string_view text, char sep, std::string_view context) {
  const auto split = text.find(sep);
  if (split == std::string_view::npos) return {parse_double(text, context), 0.0};
  return {parse_double(text.substr(0, split), context), parse_double(text.substr(split + 1), context)};
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto next = text.find(sep, start);
    parts.push_back(text.substr(start, next - start));
    if (next == std::string_view::npos) break;
    start = next + 1;
  }
  return parts;
}

bool starts_with(std::string_view text, std::string_view prefix) { return text.substr(0, prefix.size()) == prefix; }

std::function<Complex(double)> parse_psi(std::string_view spec) {
  if (spec.empty() || spec == "zero") return [](double) { return Complex{}; };
  if (starts_with(spec, "trace:")) {
    const CatalogMap map = catalog_from_label(spec.substr(6));
    return [map](double t) { return map.value(std::polar(1.0, t)); };
  }
  // Terms a<n>=c (coefficient of e^{int}) and b<n>=c (conj(c) multiplies e^{-int}).
  std::vector<std::pair<int, Complex>> terms;
  for (const auto term : split(spec, ',')) {
    const auto eq = term.find('=');
    if (term.size() < 3 || eq == std::string_view::npos || (term[0] != 'a' && term[0] != 'b')) {
      throw InputError("malformed psi term '" + std::string(term) + "'");
    }
    const double n = parse_double(term.substr(1, eq - 1), "psi term index");
    if (n < 0 || n != std::floor(n) || n > 1e6 || (term[0] == 'b' && n < 1)) {
      throw InputError("psi term '" + std::string(term) + "' has an invalid index");
    }
    const Complex c = parse_complex(term.substr(eq + 1), ':', "psi coefficient");
    if (term[0] == 'a') {
      terms.emplace_back(static_cast<int>(n), c);
    } else {
      terms.emplace_back(-static_cast<int>(n), std::conj(c));
    }
  }
  return [terms](double t) {
    Complex sum{};
    for (const auto& [n, c] : terms) sum += c * std::polar(1.0, n * t);
    return sum;
  };
}

SourceField parse_source(std::string_view spec) {
  if (spec.empty() || spec == "zero") return SourceField::zero();
  if (starts_with(spec, "const:")) return SourceField::constant(parse_complex(spec.substr(6), ':', "g constant"));
  if (starts_with(spec, "source:")) {
    const CatalogMap map = catalog_from_label(spec.substr(7));
    return map.harmonic() ? SourceField::zero() : SourceField(map.source_function());
  }
  throw InputError("malformed g spec '" + std::string(spec) + "'");
}

MappingHandle solver_mapping(std::string label, const std::function<Complex(double)>& psi, SourceField source,
                             const RunConfig& config) {
  AreaQuadrature quadrature;
  quadrature.radial_nodes = config.radial_nodes;
  quadrature.angular_nodes = config.angular_nodes;
  auto solution = std::make_shared<const PoissonSolution>(BoundaryData::sample(psi, config.boundary_nodes),
                                                          std::move(source), quadrature);
  return MappingHandle::from_solution(std::move(solution), std::move(label));
}

Majorant parse_omega(std::string_view text) {
  if (text == "t") return Majorant::linear();
  if (text == "min(t,1)") return Majorant("min(t,1)", [](double t) { return std::min(t, 1.0); });
  if (starts_with(text, "t^")) return Majorant::power(parse_double(text.substr(2), "omega exponent"));
  throw InputError("unknown majorant '" + std::string(text) + "' (expected t, t^a or min(t,1))");
}

Tolerances tolerances_of(const RunConfig& config) {
  Tolerances tol;
  tol.closed_form = config.tolerance;
  tol.solver_backed = config.solver_tolerance;
  tol.sharpness = config.sharpness;
  tol.sup_inflation = config.sup_inflation;
  return tol;
}

Json resolution_of(const RunConfig& config) {
  return Json{{"boundary_nodes", config.boundary_nodes},
              {"radial_nodes", config.radial_nodes},
              {"angular_nodes", config.angular_nodes},
              {"seed", config.seed}};
}

Json to_json(const VerificationReport& r, const RunConfig& config) {
  Json inputs = Json::object(), labels = Json::object(), constants = Json::object();
  for (const auto& [k, v] : r.inputs) inputs[k] = v;
  for (const auto& [k, v] : r.labels) labels[k] = v;
  for (const auto& [k, v] : r.constants) constants[k] = v;
  return Json{{"theorem_id", r.theorem_id},
              {"map", r.map},
              {"lhs", r.lhs},
              {"rhs", r.rhs},
              {"margin", r.margin},
              {"holds", r.holds},
              {"sharp", r.sharp},
              {"tolerance", r.tolerance},
              {"sharpness_tolerance", r.sharpness_tolerance},
              {"inputs", inputs},
              {"labels", labels},
              {"constants", constants},
              {"resolution", resolution_of(config)}};
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string csv_field(const Json& value) {
  if (value.is_null()) return "";
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_number()) return format_number(value.get<double>());
  std::string text = value.is_string() ? value.get<std::string>() : value.dump();
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (const char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

// key=value pairs joined by ';'.
std::string flatten(const Json& record) {
  std::string out;
  for (const auto& [k, v] : record.items()) {
    if (!out.empty()) out += ';';
    out += k + "=" + (v.is_number() ? format_number(v.get<double>()) : v.is_string() ? v.get<std::string>() : v.dump());
  }
  return out;
}

constexpr const char* kReportColumns[] = {"theorem_id", "map",        "lhs",           "rhs",
                                          "margin",     "holds",      "sharp",         "tolerance",
                                          "sharpness_tolerance",      "boundary_nodes", "radial_nodes",
                                          "angular_nodes", "seed",   "inputs",        "labels",
                                          "constants"};

void write_report_csv(std::ostream& os, const Json& reports) {
  bool first = true;
  for (const char* column : kReportColumns) {
    os << (first ? "" : ",") << column;
    first = false;
  }
  os << '\n';
  for (const Json& r : reports) {
    const Json& res = r["resolution"];
    os << csv_field(r["theorem_id"]) << ',' << csv_field(r["map"]) << ',' << csv_field(r["lhs"]) << ','
       << csv_field(r["rhs"]) << ',' << csv_field(r["margin"]) << ',' << csv_field(r["holds"]) << ','
       << csv_field(r["sharp"]) << ',' << csv_field(r["tolerance"]) << ',' << csv_field(r["sharpness_tolerance"])
       << ',' << csv_field(res["boundary_nodes"]) << ',' << csv_field(res["radial_nodes"]) << ','
       << csv_field(res["angular_nodes"]) << ',' << csv_field(res["seed"]) << ',' << csv_field(flatten(r["inputs"]))
       << ',' << csv_field(flatten(r["labels"])) << ',' << csv_field(flatten(r["constants"])) << '\n';
  }
}

void write_records_csv(std::ostream& os, const Json& records) {
  if (records.empty()) return;
  std::vector<std::string> columns;
  for (const auto& [k, v] : records.front().items()) columns.push_back(k);
  for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
  os << '\n';
  for (const Json& rec : records) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      os << (i ? "," : "") << (rec.contains(columns[i]) ? csv_field(rec[columns[i]]) : "");
    }
    os << '\n';
  }
}

// Writes either the verification reports (fixed columns) or generic records.
void emit(const Json& payload, bool reports, const RunConfig& config, std::ostream& out) {
  std::ofstream file;
  std::ostream* os = &out;
  if (!config.out.empty()) {
    file.open(config.out, std::ios::binary | std::ios::trunc);
    if (!file) throw InputError("cannot write output file '" + config.out + "'");
    os = &file;
  }
  if (config.format == "csv") {
    if (reports) {
      write_report_csv(*os, payload);
    } else {
      write_records_csv(*os, payload);
    }
  } else {
    *os << payload.dump(2) << '\n';
  }
  os->flush();
  if (!*os) throw InputError("failed writing output '" + config.out + "'");
}

std::vector<MappingHandle> mappings_of(const RunConfig& config, bool allow_default_catalog) {
  std::vector<MappingHandle> maps;
  for (const auto& label : config.maps) maps.push_back(make_mapping(label, config));
  if (!config.psi.empty() || !config.g.empty()) maps.push_back(make_spec_mapping(config));
  if (maps.empty()) {
    if (!allow_default_catalog) throw InputError("no map given: use --map or --psi/--g");
    for (const auto& map : default_catalog()) maps.push_back(MappingHandle::from_catalog(map));
  }
  return maps;
}

const MappingHandle& single(const std::vector<MappingHandle>& maps) {
  if (maps.size() != 1) throw InputError("this command needs exactly one map");
  return maps.front();
}

Json catalog_records() {
  Json records = Json::array();
  for (const auto& entry : catalog_listing()) {
    records.push_back(Json{{"pattern", entry.pattern},
                           {"description", entry.description},
                           {"exact_K", entry.exact_K},
                           {"source", entry.source}});
  }
  return records;
}

Json solve_records(const RunConfig& config) {
  const auto maps = mappings_of(config, false);
  std::vector<std::string> points = config.points;
  if (points.empty()) points = {"0", "0.3,0.2", "0.5", "0,-0.4"};
  Json records = Json::array();
  for (const auto& m : maps) {
    for (const auto& text : points) {
      const Complex z = parse_complex(text, ',', "--z");
      const WirtingerJet j = m.jet(z);
      const JetNorms n = jet_norms(j);
      records.push_back(Json{{"map", m.label()},
                             {"z_re", z.real()},
                             {"z_im", z.imag()},
                             {"f_re", j.f.real()},
                             {"f_im", j.f.imag()},
                             {"f_z_re", j.f_z.real()},
                             {"f_z_im", j.f_z.imag()},
                             {"f_zbar_re", j.f_zbar.real()},
                             {"f_zbar_im", j.f_zbar.imag()},
                             {"op_norm", n.op_norm},
                             {"min_stretch", n.min_stretch},
                             {"jacobian", n.jacobian}});
    }
  }
  return records;
}

Json measure_records(const RunConfig& config) {
  const std::string& fn = config.functional;
  Json records = Json::array();
  auto base = [&](const std::string& map) { return Json{{"functional", fn}, {"map", map}}; };

  if (fn == "regularity") {
    const Majorant omega = parse_omega(config.omega);
    const RegularityReport rep = check_regularity(omega);
    for (const auto& [name, c] : {std::pair{"small_scale", rep.small_scale}, std::pair{"large_scale", rep.large_scale}}) {
      Json rec = base("");
      rec["omega"] = omega.label();
      rec["condition"] = name;
      rec["constant"] = c.constant_estimate;
      rec["holds"] = c.holds;
      rec["divergent"] = c.divergent;
      records.push_back(rec);
    }
    return records;
  }

  const auto maps = mappings_of(config, false);
  const MappingHandle& m = single(maps);
  Json rec = base(m.label());
  if (fn == "perimeter") {
    rec["r"] = config.r;
    rec["value"] = perimeter(m, config.r);
  } else if (fn == "perimeter-profile") {
    const LengthProfile p = perimeter_sup(m);
    for (std::size_t i = 0; i < p.radii.size(); ++i) {
      Json row = base(m.label());
      row["kind"] = "sample";
      row["r"] = p.radii[i];
      row["value"] = p.values[i];
      records.push_back(row);
    }
    rec["kind"] = "limit";
    rec["r"] = 1.0;
    rec["value"] = p.limit;
    rec["sup_estimate"] = p.sup_estimate;
    rec["monotone"] = p.monotone;
    rec["increasing_at_end"] = p.increasing_at_end;
  } else if (fn == "radial-length") {
    rec["r"] = config.r;
    rec["theta"] = config.theta;
    rec["value"] = radial_length(m, Angle(config.theta), config.r);
  } else if (fn == "radial-sup") {
    const RadialLengthSup s = radial_length_sup(m);
    rec["value"] = s.value;
    rec["theta"] = s.theta;
    rec["r"] = s.radius;
  } else if (fn == "area") {
    rec["r"] = config.r;
    rec["value"] = image_area(m, config.r);
  } else if (fn == "isoperimetric") {
    const IsoperimetricResult iso = isoperimetric_check(m, config.tolerance);
    rec["area"] = iso.area;
    rec["perimeter"] = iso.perimeter;
    rec["bound"] = iso.bound;
    rec["holds"] = iso.holds;
  } else if (fn == "qc") {
    const QcEstimate q = qc_constant(m);
    rec["value"] = q.value;
    rec["argmax_re"] = q.argmax.real();
    rec["argmax_im"] = q.argmax.imag();
    rec["squared_form_holds"] = q.squared_form_holds;
    if (m.exact_K()) rec["exact_K"] = *m.exact_K();
  } else if (fn == "bloch") {
    BlochParams p;
    p.omega = parse_omega(config.omega);
    p.alpha = config.alpha;
    rec["omega"] = p.omega.label();
    rec["alpha"] = p.alpha;
    rec["value"] = bloch_norm(m, p);
  } else if (fn == "mean-oscillation") {
    const Complex z = config.points.empty() ? Complex{} : parse_complex(config.points.front(), ',', "--z");
    rec["z_re"] = z.real();
    rec["z_im"] = z.imag();
    rec["r"] = config.r;
    rec["value"] = mean_oscillation(m, z, config.r);
  } else if (fn == "coefficients") {
    const CoefficientSpectrum s = harmonic_coefficients(m.boundary_trace(config.boundary_nodes), config.n_max);
    for (std::size_t n = 0; n <= s.n_max(); ++n) {
      Json row = base(m.label());
      const auto i = static_cast<Eigen::Index>(n);
      row["n"] = n;
      row["a_re"] = s.a(i).real();
      row["a_im"] = s.a(i).imag();
      row["b_re"] = s.b(i).real();
      row["b_im"] = s.b(i).imag();
      row["aliasing"] = s.aliasing;
      records.push_back(row);
    }
    return records;
  } else if (fn == "lipschitz") {
    const Majorant omega = parse_omega(config.omega);
    PairSampling sampling;
    sampling.seed = config.seed;
    rec["omega"] = omega.label();
    rec["value"] = lipschitz_constant(m, omega, sample_pairs(m.max_radius(), sampling));
  } else if (fn == "weighted-lipschitz") {
    BlochParams p;
    p.omega = parse_omega(config.omega);
    p.alpha = config.alpha;
    p.s = config.s;
    PairSampling sampling;
    sampling.seed = config.seed;
    rec["omega"] = p.omega.label();
    rec["alpha"] = p.alpha;
    rec["s"] = p.s;
    rec["value"] = weighted_lipschitz(m, p, sample_pairs(m.max_radius(), sampling));
  } else {
    throw InputError("unknown functional '" + fn + "'");
  }
  records.push_back(rec);
  return records;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void validate(const RunConfig& config) {
  if (config.boundary_nodes < 16 || !is_power_of_two(config.boundary_nodes)) {
    throw InputError("--boundary-nodes must be a power of two >= 16");
  }
  if (config.radial_nodes == 0 || config.angular_nodes == 0) throw InputError("quadrature node counts must be positive");
  if (config.format != "json" && config.format != "csv") throw InputError("--format must be json or csv");
  if (config.n_max == 0 || config.n_max >= config.boundary_nodes / 2) {
    throw InputError("--n-max must lie in [1, boundary_nodes / 2)");
  }
}

}  // namespace

MappingHandle make_mapping(const std::string& label, const RunConfig& config) {
  if (starts_with(label, "solver:")) {
    const CatalogMap map = catalog_from_label(std::string_view(label).substr(7));
    SourceField source = map.harmonic() ? SourceField::zero() : SourceField(map.source_function());
    return solver_mapping(
        label, [map](double t) { return map.value(std::polar(1.0, t)); }, std::move(source), config);
  }
  return MappingHandle::from_catalog(catalog_from_label(label));
}

MappingHandle make_spec_mapping(const RunConfig& config) {
  std::string label = "psi=" + (config.psi.empty() ? std::string("zero") : config.psi) +
                      ";g=" + (config.g.empty() ? std::string("zero") : config.g);
  return solver_mapping(std::move(label), parse_psi(config.psi), parse_source(config.g), config);
}

std::string describe_specs() {
  return "Map labels: identity, scale:M, shear:b, quadratic-source:c, cubic:c (complex parameters as re or re,im);\n"
         "  prefix with solver: to rebuild the map from its boundary trace and source by quadrature.\n"
         "--psi: zero | trace:<label> | comma-separated terms a<n>=re[:im] (coefficient of e^{int})\n"
         "       and b<n>=re[:im] (its conjugate multiplies e^{-int}).\n"
         "--g:   zero | const:re[:im] | source:<label>.\n";
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    if (config.command == "catalog") {
      emit(catalog_records(), false, config, out);
      return kAllHold;
    }
    if (config.command == "solve") {
      emit(solve_records(config), false, config, out);
      return kAllHold;
    }
    if (config.command == "measure") {
      emit(measure_records(config), false, config, out);
      return kAllHold;
    }
    if (config.command == "verify") {
      const Suite suite = parse_suite(config.suite);
      SuiteOptions options;
      options.tolerances = tolerances_of(config);
      options.pairs.seed = config.seed;
      options.n_max = config.n_max;
      options.boundary_nodes = config.boundary_nodes;
      options.quadrature.radial_nodes = config.radial_nodes;
      options.quadrature.angular_nodes = config.angular_nodes;
      Json reports = Json::array();
      bool all_hold = true;
      for (const auto& m : mappings_of(config, true)) {
        for (const auto& report : run_suite(m, suite, options)) {
          all_hold = all_hold && report.holds;
          reports.push_back(to_json(report, config));
        }
      }
      emit(reports, true, config, out);
      return all_hold ? kAllHold : kCheckFailed;
    }
    throw InputError("unknown command '" + config.command + "'");
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::logic_error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kInputError;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Poisson's equation on the unit disk: solve, measure and verify inequalities.\n\n" + describe_specs()};
  app.set_config("--config", "", "Read options from a TOML or INI file; flags override it");
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.add_subcommand("catalog", "List the closed-form test maps");
  app.add_subcommand("solve", "Evaluate f and its Wirtinger derivatives at points");
  app.add_subcommand("measure", "Compute one geometric or function-space functional");
  app.add_subcommand("verify", "Run verification suites and write reports");

  const auto pow2 = CLI::Validator(
      [](std::string& text) -> std::string {
        std::size_t n = 0;
        const auto res = std::from_chars(text.data(), text.data() + text.size(), n);
        if (res.ec != std::errc() || res.ptr != text.data() + text.size() || n < 16 || !is_power_of_two(n)) {
          return "must be a power of two >= 16";
        }
        return {};
      },
      "POW2");

  app.add_option("--map", config.maps, "Map label (repeatable)");
  app.add_option("--psi", config.psi, "Dirichlet datum spec");
  app.add_option("--g", config.g, "Source spec");
  app.add_option("--suite", config.suite, "Verification suite")
      ->check(CLI::IsMember({"thm1", "thm2", "thm3", "thm4", "lem21", "lem22", "isoperimetric", "schwarz", "all"}));
  app.add_option("--functional", config.functional, "Functional for measure")
      ->check(CLI::IsMember({"perimeter", "perimeter-profile", "radial-length", "radial-sup", "area", "isoperimetric",
                             "qc", "bloch", "mean-oscillation", "coefficients", "lipschitz", "weighted-lipschitz",
                             "regularity"}));
  app.add_option("--r", config.r, "Radius");
  app.add_option("--theta", config.theta, "Angle in radians");
  app.add_option("--alpha", config.alpha, "Weight exponent");
  app.add_option("--s", config.s, "Two-point weight exponent");
  app.add_option("--omega", config.omega, "Majorant: t, t^a or min(t,1)");
  app.add_option("--n-max", config.n_max, "Largest coefficient index");
  app.add_option("--z", config.points, "Evaluation point re,im (repeatable)");
  app.add_option("--out", config.out, "Output file (default: standard output)");
  app.add_option("--format", config.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--boundary-nodes", config.boundary_nodes, "Boundary samples N")->check(pow2);
  app.add_option("--radial-nodes", config.radial_nodes, "Radial nodes of the area quadrature")
      ->check(CLI::PositiveNumber);
  app.add_option("--angular-nodes", config.angular_nodes, "Angular nodes of the area quadrature")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "Seed for pair sampling");
  app.add_option("--tolerance", config.tolerance, "Absolute tolerance for closed-form maps")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--solver-tolerance", config.solver_tolerance, "Absolute tolerance for solver-backed maps")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--sharpness", config.sharpness, "Sharpness tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--inflation", config.sup_inflation, "Inflation of grid suprema")->check(CLI::Range(1.0, 10.0));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kAllHold : kInputError;
  }
  config.command = app.get_subcommands().front()->get_name();
  return run(config, out, err);
}

}  // namespace diskpoisson::cli
