#include "doctest.h"

#include "aekahler/kernels.hpp"

using namespace aek;

TEST_CASE("curvature grid: parallel equals serial") {
  const auto p = make_profile({FamilyKind::volume, 0.3, std::nullopt});
  const auto radii = log_points(1e-2, 1e2, 64);
  const auto a = curvature_grid(*p, radii, Execution::serial);
  const auto b = curvature_grid(*p, radii, Execution::parallel);
  REQUIRE(a.size() == radii.size());
  REQUIRE(b.size() == radii.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].r == radii[i]);
    CHECK(b[i].r == a[i].r);
    CHECK(b[i].scalar == a[i].scalar);
    CHECK(b[i].ricci_eigs == a[i].ricci_eigs);
  }
}

TEST_CASE("family sweep: parallel equals serial, mass decreasing") {
  const std::vector<double> lambdas = {1.0, 0.1, 0.01};
  const auto a = family_sweep(FamilyKind::burns_log, lambdas, Execution::serial);
  const auto b = family_sweep(FamilyKind::burns_log, lambdas, Execution::parallel);
  REQUIRE(a.size() == 3);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].spec.lambda == lambdas[i]);
    CHECK(b[i].mass.mass_scalar_integral == a[i].mass.mass_scalar_integral);
    CHECK(b[i].mass.rhs_theorem11 == a[i].mass.rhs_theorem11);
    if (i > 0) CHECK(a[i].mass.mass_scalar_integral < a[i - 1].mass.mass_scalar_integral);
  }
}

TEST_CASE("errors inside parallel regions propagate") {
  const auto p = make_expression_profile("neg", -Expression::s());
  CHECK_THROWS(curvature_grid(*p, {1.0, 2.0, 3.0}, Execution::parallel));
}
