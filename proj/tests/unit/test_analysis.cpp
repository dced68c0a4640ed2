#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <memory>
#include <numbers>

#include "diskpoisson/analysis.hpp"
#include "diskpoisson/catalog.hpp"
#include "diskpoisson/suites.hpp"

namespace dp = diskpoisson;
using C = std::complex<double>;

namespace {

dp::MappingHandle handle(const dp::CatalogMap& map) { return dp::MappingHandle::from_catalog(map); }

dp::MappingHandle unit_source_handle() {
  dp::AreaQuadrature q;
  q.radial_nodes = 32;
  q.angular_nodes = 64;
  auto sol = std::make_shared<const dp::PoissonSolution>(dp::BoundaryData::sample([](double) { return C{}; }, 1024),
                                                         dp::SourceField::constant(1.0), q);
  return dp::MappingHandle::from_solution(sol, "unit-source");
}

const dp::VerificationReport& find(const std::vector<dp::VerificationReport>& reports, const std::string& id) {
  const auto it = std::find_if(reports.begin(), reports.end(), [&](const auto& r) { return r.theorem_id == id; });
  if (it == reports.end()) throw std::runtime_error("missing report " + id);
  return *it;
}

}  // namespace

TEST(Spectrum, ShearCoefficients) {
  // z + beta conj(z) on the circle is e^{it} + beta e^{-it}, so a_1 = 1 and b_1 = conj(beta).
  const C beta(0.3, 0.2);
  const auto s = dp::harmonic_coefficients(handle(dp::CatalogMap::shear(beta)).boundary_trace(256), 8);
  EXPECT_NEAR(std::abs(s.a(1) - 1.0), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(s.b(1) - std::conj(beta)), 0.0, 1e-14);
  EXPECT_EQ(s.b(0), C{});
  for (Eigen::Index n = 2; n <= 8; ++n) EXPECT_LT(std::abs(s.a(n)) + std::abs(s.b(n)), 1e-14);
  EXPECT_FALSE(s.aliasing);
  EXPECT_THROW(dp::harmonic_coefficients(dp::BoundaryData(Eigen::VectorXcd::Zero(16)), 8), std::invalid_argument);
}

TEST(Spectrum, ReconstructionIsIdempotent) {
  const auto trace = handle(dp::CatalogMap::cubic(0.2)).boundary_trace(128);
  const auto first = dp::harmonic_coefficients(trace, 20);
  const auto second = dp::harmonic_coefficients(dp::reconstruct(first, 128), 20);
  EXPECT_LT((first.a - second.a).norm() + (first.b - second.b).norm(), 1e-14);
}

TEST(Spectrum, RoughDataIsFlaggedAsAliased) {
  const auto rough = dp::BoundaryData::sample([](double t) { return C(std::abs(std::sin(t)) < 0.5 ? 1.0 : 0.0); }, 64);
  EXPECT_TRUE(dp::harmonic_coefficients(rough, 8).aliasing);
}

TEST(Spectrum, SeriesMatchesHarmonicMap) {
  const auto map = dp::CatalogMap::shear(C(0.1, -0.4));
  const dp::HarmonicSeries series(dp::harmonic_coefficients(handle(map).boundary_trace(64), 16));
  EXPECT_EQ(series.terms(), 2u);
  for (const C z : {C(0.0, 0.0), C(0.5, 0.5), C(0.0, 1.0)}) {
    const auto jet = series.jet(z);
    const auto exact = map.jet(z);
    EXPECT_NEAR(std::abs(jet.f - exact.f), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(jet.f_z - exact.f_z), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(jet.f_zbar - exact.f_zbar), 0.0, 1e-14);
  }
}

TEST(Reports, MarginHoldsAndSharpness) {
  const auto r = dp::make_report("t", "m", 1.0, 1.0 - 1e-9, 1e-8, 1e-6);
  EXPECT_NEAR(r.margin, -1e-9, 1e-15);
  EXPECT_TRUE(r.holds);
  EXPECT_TRUE(r.sharp);
  const auto f = dp::make_report("t", "m", 2.0, 1.0, 1e-8, 1e-6);
  EXPECT_FALSE(f.holds);
  EXPECT_FALSE(f.sharp);
}

TEST(Sampling, PairsAreDeterministicAndInside) {
  const auto a = dp::sample_pairs(0.9);
  const auto b = dp::sample_pairs(0.9);
  ASSERT_EQ(a.size(), b.size());
  EXPECT_GT(a.size(), 10000u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].z, b[i].z);
    EXPECT_EQ(a[i].w, b[i].w);
    EXPECT_LT(std::abs(a[i].z), 0.9);
    EXPECT_LT(std::abs(a[i].w), 0.9);
  }
  dp::PairSampling other;
  other.seed = 8;
  EXPECT_NE(dp::sample_pairs(0.9, other).front().z, a.front().z);
}

TEST(Sampling, DiskGridIncludesBoundaryLayer) {
  const auto radii = dp::disk_grid_radii(1.0, {});
  EXPECT_NEAR(*std::max_element(radii.begin(), radii.end()), 1.0 - std::ldexp(1.0, -12), 1e-15);
  const auto points = dp::disk_grid(1.0, {});
  EXPECT_NE(std::find(points.begin(), points.end(), C{}), points.end());
  EXPECT_EQ(dp::disk_grid_radii(0.5, {}).back(), 0.5);
}

TEST(Functionals, MeanOscillationOfIdentity) {
  // (1/(pi r^2)) int_{D_r} |zeta| dA = 2r/3.
  const auto id = handle(dp::CatalogMap::identity());
  for (const double r : {0.1, 0.5, 0.9}) EXPECT_NEAR(dp::mean_oscillation(id, 0.0, r), 2.0 * r / 3.0, 1e-10);
  EXPECT_NEAR(dp::mean_oscillation(id, C(0.3, 0.2), 0.2), 0.4 / 3.0, 1e-10);
}

TEST(Functionals, BlochNormOfUnitSourceSolution) {
  // f = (|z|^2 - 1)/4: ||D_f|| = |z|/2, so sup |z|(1 - |z|)/2 = 1/8 and |f(0)| = 1/4.
  // The grid misses |z| = 1/2 by about 0.005.
  const auto m = unit_source_handle();
  EXPECT_NEAR(dp::bloch_norm(m, {}), 0.375, 1e-4);
}

TEST(Functionals, LipschitzConstantsOfIdentity) {
  const auto id = handle(dp::CatalogMap::identity());
  const auto pairs = dp::sample_pairs(1.0);
  EXPECT_NEAR(dp::lipschitz_constant(id, dp::Majorant::linear(), pairs), 1.0, 1e-12);
  EXPECT_NEAR(dp::derivative_constant(id, dp::Majorant::linear()), 1.0, 1e-12);
  const double half = dp::lipschitz_constant(id, dp::Majorant::power(0.5), pairs);
  EXPECT_GT(half, 1.0);
  EXPECT_LE(half, 2.0);
}

TEST(Functionals, WeightedLipschitzOfIdentity) {
  // |z - w| omega(d(z)^s d(w)^(1-s)) / |z - w| <= 1, approached near the centre.
  dp::BlochParams p;
  p.s = 0.5;
  const double value = dp::weighted_lipschitz(handle(dp::CatalogMap::identity()), p, dp::sample_pairs(1.0));
  EXPECT_LE(value, 1.0);
  EXPECT_GT(value, 0.98);
}

TEST(Functionals, CurveConditionForPowers) {
  const auto pairs = dp::sample_pairs(1.0);
  const auto linear = dp::curve_condition_constant(dp::Majorant::linear(), pairs);
  EXPECT_NEAR(linear.constant, 1.0, 1e-9);
  const auto half = dp::curve_condition_constant(dp::Majorant::power(0.5), pairs);
  EXPECT_LE(half.constant, half.segment_constant);
  EXPECT_LT(half.constant, 10.0);
}

TEST(Functionals, RadialProfile) {
  const std::vector<double> radii{0.25, 0.5, 1.0};
  const std::vector<double> thetas{0.0, 1.0};
  const auto profile = dp::radial_profile([](C z) { return 2.0 * std::abs(z); }, radii, thetas);
  for (std::size_t i = 0; i < radii.size(); ++i) EXPECT_NEAR(profile[i], radii[i] * radii[i], 1e-14);
}

TEST(Functionals, MeasurementsOfShear) {
  const auto m = dp::measure_map(handle(dp::CatalogMap::shear(0.5)));
  EXPECT_TRUE(m.K_exact);
  EXPECT_NEAR(m.K, 3.0, 1e-14);
  EXPECT_NEAR(m.radial_sup, 1.5, 1e-12);
  EXPECT_EQ(m.source_sup, 0.0);
}

TEST(Verifiers, CoefficientBoundIsSharpForIdentity) {
  const auto reports = dp::verify_thm3(handle(dp::CatalogMap::identity()));
  ASSERT_EQ(reports.size(), 33u);
  EXPECT_NEAR(reports.front().lhs, 1.0, 1e-12);
  EXPECT_NEAR(reports.front().rhs, 1.0, 1e-12);
  EXPECT_TRUE(reports.front().sharp);
  for (const auto& r : reports) EXPECT_TRUE(r.holds) << r.theorem_id;
  const auto& derivative = find(reports, "thm3-derivative");
  EXPECT_NEAR(derivative.lhs, 1.0, 1e-4);
}

TEST(Verifiers, ScaledRadialBoundIsSharp) {
  for (const double M : {1.0, 2.0, 5.0}) {
    const auto reports = dp::verify_thm4(handle(dp::CatalogMap::scale(M)));
    EXPECT_NEAR(reports.front().lhs, M, 1e-12);
    EXPECT_NEAR(reports.front().rhs, M, 1e-6 * M);
    EXPECT_TRUE(reports.front().sharp);
  }
}

TEST(Verifiers, GreenDerivativeBoundForUnitSource) {
  dp::GreenDerivativeGrid grid;
  grid.quadrature.radial_nodes = 32;
  grid.quadrature.angular_nodes = 64;
  const auto r = dp::verify_lemma21(dp::SourceField::constant(1.0), "g=1", grid, 1e-8);
  EXPECT_TRUE(r.holds);
  EXPECT_NEAR(r.lhs, 0.25, 1e-4);
  EXPECT_GE(r.rhs - r.lhs, 0.08);
}

TEST(Verifiers, LocalDerivativeBound) {
  const auto m = handle(dp::CatalogMap::quadratic_source(0.2));
  EXPECT_TRUE(dp::verify_lemma22(m, C(0.2, 0.1), 0.5).holds);
  EXPECT_TRUE(dp::verify_lemma22(m, 0.0, 0.99).holds);
}

TEST(Verifiers, OscillationBoundsForIdentity) {
  const auto m = handle(dp::CatalogMap::identity());
  const auto points = dp::oscillation_sample_points(1.0);
  EXPECT_EQ(points.size(), 100u);
  dp::BlochParams p;
  // Mean oscillation of the identity over any disk of radius r is 2r/3.
  double largest = 0.0;
  for (const C z : points) largest = std::max(largest, 1.0 - std::abs(z));
  const double osc = dp::oscillation_constant(m, p, points);
  EXPECT_NEAR(osc, 2.0 * largest / 3.0, 1e-10);
  EXPECT_TRUE(dp::verify_thm2_forward(m, p, osc, points).holds);
  EXPECT_TRUE(dp::verify_thm2_reverse(m, p, dp::bloch_constant(m, p), points).holds);
}

TEST(Verifiers, SchwarzProfileForCatalog) {
  for (const auto& map : dp::default_catalog()) {
    const auto reports = dp::verify_schwarz(handle(map));
    const auto& radial = find(reports, "schwarz-radial");
    EXPECT_TRUE(radial.holds) << map.label();
    EXPECT_LE(radial.lhs, radial.rhs + 1e-8) << map.label();
    EXPECT_TRUE(find(reports, "schwarz-chain").holds) << map.label();
  }
}

TEST(Verifiers, IsoperimetricForCatalog) {
  for (const auto& map : dp::default_catalog()) EXPECT_TRUE(dp::verify_isoperimetric(handle(map)).holds) << map.label();
}

TEST(Suites, NamesRoundTrip) {
  for (const char* name : {"thm1", "thm2", "thm3", "thm4", "lem21", "lem22", "isoperimetric", "schwarz", "all"}) {
    EXPECT_EQ(dp::suite_name(dp::parse_suite(name)), name);
  }
  EXPECT_THROW(dp::parse_suite("thm9"), std::invalid_argument);
}

TEST(Suites, FullSuiteHoldsForShear) {
  const auto reports = dp::run_suite(handle(dp::CatalogMap::shear(0.5)), dp::Suite::all);
  EXPECT_GT(reports.size(), 70u);
  for (const auto& r : reports) EXPECT_TRUE(r.holds) << r.theorem_id << " margin " << r.margin;
}
