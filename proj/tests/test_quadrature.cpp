#include "doctest.h"

#include <cmath>

#include "aekahler/errors.hpp"
#include "aekahler/quadrature.hpp"

using namespace aek;

TEST_CASE("finite integrals") {
  CHECK(integrate([](double x) { return x * x * (1.0 - x); }, 0.0, 1.0).value ==
        doctest::Approx(1.0 / 12.0).epsilon(1e-14));
  // endpoint singularity, never sampled
  CHECK(integrate([](double x) { return std::log(x); }, 0.0, 1.0).value ==
        doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("improper integrals with both substitutions") {
  for (auto sub : {Substitution::rational_map, Substitution::log_map}) {
    QuadratureSpec spec = default_quadrature_spec();
    spec.improper_substitution = sub;
    CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, INFINITY, spec).value ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(integrate([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, INFINITY, spec).value ==
          doctest::Approx(M_PI / 2).epsilon(1e-10));
    CHECK(integrate([](double x) { return std::pow(1.0 + x, -4.0); }, 0.0, INFINITY, spec).value ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-10));
  }
}

TEST_CASE("improper integral needs a substitution") {
  QuadratureSpec spec = default_quadrature_spec();
  spec.improper_substitution = Substitution::none;
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, INFINITY, spec), UsageError);
}

TEST_CASE("divergent integral reports the worst subinterval") {
  QuadratureSpec spec = default_quadrature_spec();
  spec.max_depth = 20;
  try {
    integrate([](double x) { return 1.0 / x; }, 0.0, 1.0, spec);
    FAIL("expected ToleranceFailure");
  } catch (const ToleranceFailure& e) {
    CHECK(e.worst_a() == 0.0);
    CHECK(e.worst_b() < 1e-3);
  }
}

TEST_CASE("bad tolerances are usage errors") {
  QuadratureSpec spec;
  spec.rel_tol = -1.0;
  CHECK_THROWS_AS(integrate([](double x) { return x; }, 0.0, 1.0, spec), UsageError);
}

TEST_CASE("2D integral, serial and parallel agree exactly") {
  auto f = [](double x, double y) { return x * y; };
  const auto spec = default_quadrature_spec();
  const auto a = integrate_2d(f, {0.0, 1.0}, {0.0, 1.0}, spec, spec, Execution::serial);
  const auto b = integrate_2d(f, {0.0, 1.0}, {0.0, 1.0}, spec, spec, Execution::parallel);
  CHECK(a.value == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(a.value == b.value);
  auto g = [](double x, double y) { return std::exp(-x) * std::sin(y) * std::cos(x * y); };
  const auto c = integrate_2d(g, {0.0, 3.0}, {0.0, 2.0}, spec, spec, Execution::serial);
  const auto d = integrate_2d(g, {0.0, 3.0}, {0.0, 2.0}, spec, spec, Execution::parallel);
  CHECK(c.value == d.value);
}

TEST_CASE("jet integrand is integrated componentwise") {
  // int_0^1 exp(s t) dt as a jet in s at s = 1: k-th derivative is int t^k e^t dt
  const double s = 1.0;
  auto f = [s](double t) {
    const double e = std::exp(s * t);
    return Jet4(e, t * e, t * t * e, t * t * t * e, t * t * t * t * e);
  };
  const auto r = integrate_jet(f, 0.0, 1.0);
  const double e = std::exp(1.0);
  CHECK(r.value[0] == doctest::Approx(e - 1.0).epsilon(1e-13));
  CHECK(r.value[1] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(r.value[2] == doctest::Approx(e - 2.0).epsilon(1e-13));
  CHECK(r.value[3] == doctest::Approx(6.0 - 2.0 * e).epsilon(1e-12));
  CHECK(r.value[4] == doctest::Approx(9.0 * e - 24.0).epsilon(1e-12));
}
