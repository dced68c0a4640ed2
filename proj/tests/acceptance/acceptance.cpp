// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero when any criterion fails.
//
// Usage: acceptance <path to diskpoisson executable> <scratch directory>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "diskpoisson/analysis.hpp"
#include "diskpoisson/catalog.hpp"
#include "diskpoisson/kernels.hpp"
#include "diskpoisson/majorant.hpp"
#include "diskpoisson/solver.hpp"

namespace dp = diskpoisson;
using C = std::complex<double>;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome outcome;
  try {
    outcome = body();
  } catch (const std::exception& e) {
    outcome = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (!outcome.pass) ++failures;
  std::printf("%s %2d %-34s %s [%.2fs]\n", outcome.pass ? "PASS" : "FAIL", id, name.c_str(), outcome.detail.c_str(),
              seconds);
  std::fflush(stdout);
}

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), format, args...);
  return buf;
}

double elapsed(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

dp::MappingHandle handle(const dp::CatalogMap& map) { return dp::MappingHandle::from_catalog(map); }

const dp::VerificationReport& find(const std::vector<dp::VerificationReport>& reports, const std::string& id) {
  const auto it = std::find_if(reports.begin(), reports.end(), [&](const auto& r) { return r.theorem_id == id; });
  if (it == reports.end()) throw std::runtime_error("missing report " + id);
  return *it;
}

// Fourth-order central difference of a real function of w, as d/dw.
C wirtinger_dw(const std::function<double(C)>& f, C w, double h) {
  auto d = [&](C step) {
    return (-f(w + 2.0 * step) + 8.0 * f(w + step) - 8.0 * f(w - step) + f(w - 2.0 * step)) / (12.0 * h);
  };
  return 0.5 * C(d(C(h, 0.0)), -d(C(0.0, h)));
}

double relative_error(C approx, C exact) { return std::abs(approx - exact) / std::abs(exact); }

std::string slurp(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: %s <diskpoisson executable> <scratch directory>\n", argv[0]);
    return 2;
  }
  const std::string tool = argv[1];
  const std::filesystem::path scratch = argv[2];
  constexpr double kPi = std::numbers::pi;

  criterion(1, "coefficient bound sharp (identity)", [] {
    const auto start = Clock::now();
    const auto reports = dp::verify_thm3(handle(dp::CatalogMap::identity()), 1);
    const auto& first = reports.front();
    const double t = elapsed(start);
    const bool ok = first.theorem_id == "thm3-coefficient" && std::abs(first.lhs - 1.0) <= 1e-6 &&
                    std::abs(first.rhs - 1.0) <= 1e-6 && std::abs(first.lhs - first.rhs) <= 1e-6 && first.holds &&
                    t < 5.0;
    return Outcome{ok, fmt("|a1|+|b1|=%.12f bound=%.12f runtime=%.2fs", first.lhs, first.rhs, t)};
  });

  criterion(2, "derivative bound sharp (identity)", [] {
    const auto start = Clock::now();
    const auto reports = dp::verify_thm3(handle(dp::CatalogMap::identity()), 1);
    const auto& r = find(reports, "thm3-derivative");
    const double t = elapsed(start);
    const bool ok = std::abs(r.lhs - 1.0) <= 1e-4 && std::abs(r.rhs - 1.0) <= 1e-4 && std::abs(r.lhs - r.rhs) <= 1e-4 &&
                    r.holds && t < 30.0;
    return Outcome{ok, fmt("sup=%.10f bound=%.10f runtime=%.2fs", r.lhs, r.rhs, t)};
  });

  criterion(3, "radial coefficient bound sharp", [] {
    bool ok = true;
    std::string detail;
    for (const double M : {1.0, 2.0, 5.0}) {
      const auto map = handle(dp::CatalogMap::scale(M));
      const auto spectrum = dp::harmonic_coefficients(map.boundary_trace(), 1);
      const double a1 = std::abs(spectrum.a(1));
      const auto& report = dp::verify_thm4(map, 1).front();
      const bool good = std::abs(a1 - report.rhs) <= 1e-6 * M && std::abs(report.rhs - M) <= 1e-6 * M && report.holds;
      ok = ok && good;
      detail += fmt("M=%g:|a1|=%.12f KM=%.12f ", M, a1, report.rhs);
    }
    return Outcome{ok, detail};
  });

  criterion(4, "solver closed-form oracle", [] {
    const dp::PoissonSolution sol(dp::BoundaryData::sample([](double) { return C{}; }, dp::kDefaultBoundaryNodes),
                                  dp::SourceField::constant(1.0));
    const C f0 = dp::solve(sol, dp::Point::interior(0.0, 0.0));
    std::mt19937_64 rng(20);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const C z = std::polar(0.9 * std::sqrt(u(rng)), 2.0 * kPi * u(rng));
      worst = std::max(worst, dp::laplacian_residual(sol, dp::Point::interior(z), 1e-3));
    }
    const bool ok = std::abs(f0 - C(-0.25)) <= 1e-5 && worst < 1e-3;
    return Outcome{ok, fmt("f(0)=%.12f max residual=%.3e", f0.real(), worst)};
  });

  criterion(5, "Green derivative bound (g=1)", [] {
    const auto r = dp::verify_lemma21(dp::SourceField::constant(1.0), "g=1");
    const bool ok = std::abs(r.lhs - 0.25) <= 1e-4 && r.holds && (1.0 / 3.0 - r.lhs) >= 0.08;
    return Outcome{ok, fmt("sup|dG|=%.8f bound=1/3 margin=%.6f", r.lhs, 1.0 / 3.0 - r.lhs)};
  });

  criterion(6, "isoperimetric inequality", [] {
    bool ok = true;
    std::string detail;
    auto maps = dp::default_catalog();
    maps.push_back(dp::CatalogMap::scale(1.0));
    maps.push_back(dp::CatalogMap::scale(5.0));
    for (const auto& map : maps) {
      const auto r = dp::verify_isoperimetric(handle(map), {});
      ok = ok && r.holds && r.lhs <= r.rhs * (1.0 + 1e-8);
      const bool disk = map.label() == "identity" || map.label().rfind("scale:", 0) == 0;
      if (disk) {
        const double gap = std::abs(r.rhs - r.lhs) / r.rhs;
        ok = ok && gap <= 1e-6;
        detail += fmt("%s:gap=%.1e ", map.label().c_str(), gap);
      }
    }
    return Outcome{ok, detail};
  });

  criterion(7, "oscillation constants (identity)", [] {
    const auto m = handle(dp::CatalogMap::identity());
    bool ok = true;
    double worst = 0.0;
    for (const double r : {0.1, 0.5, 0.9}) {
      const double err = std::abs(dp::mean_oscillation(m, 0.0, r) - 2.0 * r / 3.0);
      worst = std::max(worst, err);
      ok = ok && err <= 1e-6;
    }
    const auto points = dp::oscillation_sample_points(m.max_radius(), 100);
    dp::BlochParams p;
    const double osc = dp::oscillation_constant(m, p, points) * 1.01;
    const auto forward = dp::verify_thm2_forward(m, p, osc, points);
    const auto reverse = dp::verify_thm2_reverse(m, p, dp::bloch_constant(m, p) * 1.01, points);
    ok = ok && points.size() == 100 && forward.holds && reverse.holds;
    return Outcome{ok, fmt("max|MO-2r/3|=%.2e forward margin=%.4f reverse margin=%.4f", worst, forward.margin,
                           reverse.margin)};
  });

  criterion(8, "derivative kernels vs finite differences", [] {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    auto point = [&](double radius) { return std::polar(radius * std::sqrt(u(rng)), 2.0 * kPi * u(rng)); };
    double worst = 0.0;
    int configs = 0;
    while (configs < 100) {
      const C zc = point(0.5);
      const double r = 0.05 + 0.4 * u(rng) * (1.0 - std::abs(zc));
      const C w = zc + point(0.9 * r);
      const dp::Angle t(2.0 * kPi * u(rng));
      const C zeta = point(0.95);
      if (std::abs((w - zc) / r - zeta) < 0.05) continue;
      ++configs;
      const auto pw = dp::Point::interior(w);
      const auto pz = dp::Point::interior(zc);
      const auto pzeta = dp::Point::interior(zeta);
      const double h = 1e-4 * r;
      const C p_fd = wirtinger_dw([&](C x) { return dp::unchecked::poisson((x - zc) / r, t.unit()); }, w, h);
      const C g_fd = wirtinger_dw([&](C x) { return dp::unchecked::green((x - zc) / r, zeta); }, w, h);
      // For real kernels d/dconj(w) is the conjugate of d/dw.
      worst = std::max({worst, relative_error(p_fd, dp::scaled_poisson_dw(pw, pz, r, t)),
                        relative_error(std::conj(p_fd), dp::scaled_poisson_dwbar(pw, pz, r, t)),
                        relative_error(g_fd, dp::scaled_green_dw(pw, pz, r, pzeta)),
                        relative_error(std::conj(g_fd), dp::scaled_green_dwbar(pw, pz, r, pzeta))});
    }
    return Outcome{worst <= 1e-6, fmt("configurations=%d max relative error=%.2e", configs, worst)};
  });

  criterion(9, "radial profile A(r) <= r", [] {
    bool ok = true;
    double worst = -1.0;
    for (const auto& map : dp::default_catalog()) {
      const auto reports = dp::verify_schwarz(handle(map));
      const auto& r = find(reports, "schwarz-radial");
      worst = std::max(worst, r.lhs - r.rhs);
      ok = ok && r.lhs <= r.rhs + 1e-8 && find(reports, "schwarz-chain").holds;
    }
    return Outcome{ok, fmt("max A(r)-r=%.2e over the default catalog", worst)};
  });

  criterion(10, "regular-majorant constants", [] {
    bool ok = true;
    std::string detail;
    for (const double a : {0.25, 0.5, 0.9}) {
      const auto rep = dp::check_regularity(dp::Majorant::power(a));
      const double e1 = std::abs(rep.small_scale.constant_estimate * a - 1.0);
      const double e2 = std::abs(rep.large_scale.constant_estimate * (1.0 - a) - 1.0);
      ok = ok && e1 <= 0.05 && e2 <= 0.05;
      detail += fmt("a=%g:(%.4f,%.4f) ", a, rep.small_scale.constant_estimate, rep.large_scale.constant_estimate);
    }
    const auto linear = dp::check_regularity(dp::Majorant::linear());
    ok = ok && linear.large_scale.divergent;
    detail += fmt("t:large-scale divergent=%s", linear.large_scale.divergent ? "yes" : "no");
    return Outcome{ok, detail};
  });

  criterion(11, "determinism of full suite", [&] {
    std::filesystem::create_directories(scratch);
    const auto first = scratch / "acceptance_run1.json";
    const auto second = scratch / "acceptance_run2.json";
    double slowest = 0.0;
    int codes[2] = {0, 0};
    int i = 0;
    for (const auto& out : {first, second}) {
      const auto start = Clock::now();
      const std::string cmd = "\"" + tool + "\" verify --suite all --seed 7 --out \"" + out.string() + "\"";
      codes[i++] = std::system(cmd.c_str());
      slowest = std::max(slowest, elapsed(start));
    }
    const std::string a = slurp(first), b = slurp(second);
    const bool ok = codes[0] == 0 && codes[1] == 0 && !a.empty() && a == b && slowest < 600.0;
    return Outcome{ok, fmt("exit=%d,%d bytes=%zu identical=%s slowest run=%.2fs", codes[0], codes[1], a.size(),
                           a == b ? "yes" : "no", slowest)};
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
