#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <memory>
#include <numbers>

#include "diskpoisson/catalog.hpp"
#include "diskpoisson/geometry.hpp"
#include "diskpoisson/mapping.hpp"

namespace dp = diskpoisson;
using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;

namespace {

dp::MappingHandle handle(const dp::CatalogMap& map) { return dp::MappingHandle::from_catalog(map); }

// f(z) = a z + b conj(z) given directly, for maps outside the catalog.
dp::MappingHandle affine(C a, C b) {
  dp::MappingHandle::Traits traits;
  traits.boundary_regular = true;
  return dp::MappingHandle(
      "affine", [=](C z) { return a * z + b * std::conj(z); },
      [=](C z) { return dp::WirtingerJet{a * z + b * std::conj(z), a, b}; }, dp::SourceField::zero(),
      [=](std::size_t n) { return dp::BoundaryData::sample([=](double t) { return a * std::polar(1.0, t) + b * std::polar(1.0, -t); }, n); },
      traits);
}

}  // namespace

TEST(Catalog, ParsesLabels) {
  EXPECT_EQ(dp::catalog_from_label("identity").label(), "identity");
  EXPECT_EQ(dp::catalog_from_label("shear:0.25,0.1").params().beta, C(0.25, 0.1));
  EXPECT_EQ(*dp::catalog_from_label("scale:3").exact_K(), 1.0);
  EXPECT_THROW(dp::catalog_from_label("shear:1.5"), std::invalid_argument);
  EXPECT_THROW(dp::catalog_from_label("cubic:0.5"), std::invalid_argument);
  EXPECT_THROW(dp::catalog_from_label("spiral:1"), std::invalid_argument);
  EXPECT_THROW(dp::catalog_from_label("scale:abc"), std::invalid_argument);
}

TEST(Catalog, ExactConstants) {
  EXPECT_NEAR(*dp::CatalogMap::shear(0.5).exact_K(), 3.0, 1e-15);
  EXPECT_NEAR(*dp::CatalogMap::quadratic_source(0.1).exact_K(), 1.25, 1e-15);
  EXPECT_NEAR(*dp::CatalogMap::cubic(0.1).exact_K(), 1.3 / 1.1, 1e-15);
  EXPECT_NEAR(*dp::CatalogMap::cubic(-0.1).exact_K(), 0.9 / 0.7, 1e-15);
  EXPECT_NEAR(std::abs(dp::CatalogMap::quadratic_source(C(0.1, 0.2)).laplacian(0.3) - C(0.4, 0.8)), 0.0, 1e-15);
  EXPECT_TRUE(dp::CatalogMap::shear(0.3).harmonic());
  EXPECT_FALSE(dp::CatalogMap::cubic(0.1).harmonic());
}

TEST(Mapping, CatalogHandleRejectsOutsideDisk) {
  const auto m = handle(dp::CatalogMap::identity());
  EXPECT_NO_THROW(m.jet(C(1.0, 0.0)));
  EXPECT_THROW(m.jet(C(1.1, 0.0)), dp::DomainError);
}

TEST(Mapping, SolverHandleReportsResolutionLimit) {
  auto sol = std::make_shared<const dp::PoissonSolution>(
      dp::BoundaryData::sample([](double t) { return std::polar(1.0, t); }, 64), dp::SourceField::zero());
  const auto m = dp::MappingHandle::from_solution(sol, "solver");
  EXPECT_TRUE(m.solver_backed());
  EXPECT_FALSE(m.boundary_regular());
  EXPECT_THROW(m.jet(C(0.9, 0.0)), dp::ResolutionError);
  EXPECT_EQ(m.boundary_trace().size(), 64u);
}

TEST(Perimeter, CircleAndScaling) {
  EXPECT_NEAR(dp::perimeter(handle(dp::CatalogMap::identity()), 1.0), 2.0 * kPi, 1e-12);
  EXPECT_NEAR(dp::perimeter(handle(dp::CatalogMap::identity()), 0.3), 0.6 * kPi, 1e-12);
  EXPECT_NEAR(dp::perimeter(handle(dp::CatalogMap::scale(2.0)), 1.0), 4.0 * kPi, 1e-12);
  const auto shear = dp::CatalogMap::shear(C(0.2, 0.3));
  EXPECT_NEAR(dp::perimeter(handle(shear.scaled(2.5)), 0.7), 2.5 * dp::perimeter(handle(shear), 0.7), 1e-12);
}

TEST(Perimeter, ShearIsAnEllipse) {
  // z + 0.5 conj(z) maps the circle onto the ellipse with semi-axes 1.5 and 0.5.
  const double a = 1.5, b = 0.5;
  const double exact = 4.0 * a * std::comp_ellint_2(std::sqrt(1.0 - b * b / (a * a)));
  EXPECT_NEAR(dp::perimeter(handle(dp::CatalogMap::shear(0.5)), 1.0), exact, 1e-10);
}

TEST(Perimeter, ClosedFormAtBoundaryOnly) {
  auto sol = std::make_shared<const dp::PoissonSolution>(
      dp::BoundaryData::sample([](double t) { return std::polar(1.0, t); }, 256), dp::SourceField::zero());
  EXPECT_THROW(dp::perimeter(dp::MappingHandle::from_solution(sol, "s"), 1.0), dp::DomainError);
}

TEST(Perimeter, ProfileOfSolverMapExtrapolates) {
  auto sol = std::make_shared<const dp::PoissonSolution>(
      dp::BoundaryData::sample([](double t) { return std::polar(1.0, t); }, 1024), dp::SourceField::zero());
  const auto profile = dp::perimeter_sup(dp::MappingHandle::from_solution(sol, "s"));
  EXPECT_TRUE(profile.monotone);
  EXPECT_TRUE(profile.increasing_at_end);
  // Near the admissible radius the trapezoid Poisson integral is accurate to about e^-10.
  EXPECT_NEAR(profile.limit, 2.0 * kPi, 1e-4 * 2.0 * kPi);
  EXPECT_GE(profile.sup_estimate, profile.values.back());
}

TEST(Perimeter, PolylineNeverExceedsCurveLength) {
  const auto map = dp::CatalogMap::cubic(0.25);
  const double length = dp::perimeter(handle(map), 1.0);
  double polyline = 0.0;
  const int n = 97;
  for (int k = 0; k < n; ++k) {
    polyline += std::abs(map.value(std::polar(1.0, 2.0 * kPi * (k + 1) / n)) - map.value(std::polar(1.0, 2.0 * kPi * k / n)));
  }
  EXPECT_LE(polyline, length);
  EXPECT_GT(polyline, 0.999 * length);
}

TEST(RadialLength, IdentityAndShear) {
  EXPECT_NEAR(dp::radial_length(handle(dp::CatalogMap::identity()), dp::Angle(1.0), 0.7), 0.7, 1e-14);
  // Along the real axis z + 0.5 conj(z) stretches by 1.5, along the imaginary axis by 0.5.
  const auto shear = handle(dp::CatalogMap::shear(0.5));
  EXPECT_NEAR(dp::radial_length(shear, dp::Angle(0.0), 1.0), 1.5, 1e-14);
  EXPECT_NEAR(dp::radial_length(shear, dp::Angle(kPi / 2), 1.0), 0.5, 1e-14);
  const auto sup = dp::radial_length_sup(shear);
  EXPECT_NEAR(sup.value, 1.5, 1e-14);
  EXPECT_DOUBLE_EQ(sup.radius, 1.0);
}

TEST(ImageArea, JacobianIntegrals) {
  EXPECT_NEAR(dp::image_area(handle(dp::CatalogMap::identity()), 1.0), kPi, 1e-12);
  EXPECT_NEAR(dp::image_area(handle(dp::CatalogMap::shear(0.5)), 1.0), 0.75 * kPi, 1e-12);
  EXPECT_NEAR(dp::image_area(handle(dp::CatalogMap::scale(3.0)), 0.5), 9.0 * 0.25 * kPi, 1e-12);
  EXPECT_THROW(dp::image_area(affine(0.0, 1.0), 1.0), dp::SenseReversalError);
}

TEST(Isoperimetric, HoldsWithEqualityForDisks) {
  const auto id = dp::isoperimetric_check(handle(dp::CatalogMap::identity()));
  EXPECT_TRUE(id.holds);
  EXPECT_NEAR(id.area, id.bound, 1e-10);
  const auto shear = dp::isoperimetric_check(handle(dp::CatalogMap::shear(0.5)));
  EXPECT_TRUE(shear.holds);
  EXPECT_LT(shear.area, shear.bound);
}

TEST(QcConstant, ShearAndDegenerate) {
  const auto q = dp::qc_constant(handle(dp::CatalogMap::shear(0.5)));
  EXPECT_NEAR(q.value, 3.0, 1e-12);
  EXPECT_TRUE(q.squared_form_holds);
  const auto cubic = dp::qc_constant(handle(dp::CatalogMap::cubic(0.2)));
  EXPECT_LE(cubic.value, *dp::CatalogMap::cubic(0.2).exact_K() * (1.0 + 1e-12));
  EXPECT_THROW(dp::qc_constant(affine(0.5, 0.5)), dp::DegenerateError);
}
