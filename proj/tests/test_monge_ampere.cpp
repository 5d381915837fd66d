#include "doctest.h"

#include <cmath>

#include "aekahler/errors.hpp"
#include "aekahler/families.hpp"
#include "aekahler/monge_ampere.hpp"

using namespace aek;

namespace {

VolumeDensity constant_density(double c, int m = 2) {
  VolumeDensity d;
  d.f = Expression::constant(c);
  d.m = m;
  return d;
}

// u from the closed form g(r) = r^4/2 + 9 lambda r^2 - 9 lambda^2 log(1 + r^2/lambda):
// (s u)^2 = 2 g.
double volume_u(double s, double l) {
  const double g = 0.5 * s * s + 9 * l * s - 9 * l * l * std::log1p(s / l);
  return std::sqrt(2 * g) / s;
}

}  // namespace

TEST_CASE("constant density recovers the flat slope") {
  for (int m : {2, 3}) {
    const auto p = solve_potential(constant_density(1.0, m));
    for (double s : {0.0, 1e-3, 1.0, 1e3}) {
      const Jet4 u = p->slope_jet(s);
      CHECK(std::fabs(u[0] - 1.0) <= 1e-13);
      for (int k = 1; k <= 4; ++k) CHECK(std::fabs(u[k]) <= 1e-13);
    }
    CHECK(p->potential(2.0) == doctest::Approx(2.0).epsilon(1e-13));
  }
}

TEST_CASE("f_lambda matches the closed-form solution") {
  for (double l : {1.0, 0.1}) {
    const auto p = make_profile({FamilyKind::volume, l, std::nullopt});
    for (double s : log_points(1e-4, 1e4, 33)) {
      CAPTURE(s);
      CHECK(p->slope_jet(s)[0] == doctest::Approx(volume_u(s, l)).epsilon(1e-9));
    }
  }
  const auto p = make_profile({FamilyKind::volume, 1.0, std::nullopt});
  // sympy derivative of sqrt(2 g)/s at s = 1
  CHECK(p->slope_jet(1.0)[1] == doctest::Approx(-0.40067214121084962).epsilon(1e-11));
  CHECK(p->slope_jet(0.01)[1] == doctest::Approx(-0.93741743032354156).epsilon(1e-11));
}

TEST_CASE("radicand at the origin") {
  const auto p = std::dynamic_pointer_cast<const MongeAmpereProfile>(
      make_profile({FamilyKind::volume, 1.0, std::nullopt}));
  REQUIRE(p);
  const Jet4 q0 = p->radicand_jet(0.0);
  const Jet4 f0 = volume_density(1.0).eval(Jet4::variable(0.0));
  for (int k = 0; k <= 4; ++k) CHECK(q0[k] == doctest::Approx(f0[k] * 2.0 / (2.0 + k)));
  const Jet4 q1 = p->radicand_jet(1e-9);
  CHECK(q1[0] == doctest::Approx(q0[0]).epsilon(1e-8));
  CHECK(q1[1] == doctest::Approx(q0[1]).epsilon(1e-6));
}

TEST_CASE("property: volume equation residual") {
  for (double l : {1.0, 0.01}) {
    const auto p = make_profile({FamilyKind::volume, l, std::nullopt});
    CHECK(verify_volume(*p, volume_density(l), log_points(1e-4, 1e4, 161)) <= 1e-8);
  }
  // a density with an interior bump
  VolumeDensity d;
  const Expression s = Expression::s();
  d.f = Expression::constant(1.0) + s * exp(-s);
  const auto p = solve_potential(d);
  CHECK(verify_volume(*p, d, log_points(1e-3, 1e3, 61)) <= 1e-8);
}

TEST_CASE("invalid densities") {
  CHECK_THROWS_AS(solve_potential(constant_density(-1.0)), InvalidDensity);
  CHECK_THROWS_AS(solve_potential(constant_density(2.0)), InvalidDensity);
  VolumeDensity d;
  d.f = log(Expression::s() - Expression::constant(1.0));
  CHECK_THROWS_AS(solve_potential(d), InvalidDensity);
  CHECK_THROWS_AS(solve_potential(constant_density(1.0, 1)), UsageError);
}

TEST_CASE("beta0 makes the origin singular") {
  VolumeDensity d = constant_density(1.0);
  d.beta0 = 0.5;
  const auto p = solve_potential(d);
  CHECK(p->slope_jet(1.0)[0] == doctest::Approx(std::sqrt(1.5)));
  CHECK_THROWS_AS(p->slope_jet(0.0), EvaluationError);
}

TEST_CASE("density json") {
  const VolumeDensity d = volume_density(0.5);
  const VolumeDensity back = VolumeDensity::from_json(d.to_json());
  CHECK(back.eval(2.0) == doctest::Approx(d.eval(2.0)));
  CHECK(back.params.at("lambda") == 0.5);
  CHECK_THROWS_AS(VolumeDensity::from_json({{"params", {{"lambda", 1}}}}), ParseError);
  CHECK_THROWS_AS(VolumeDensity::from_json({{"density", 1}, {"m", 1.5}}), ParseError);
  CHECK_THROWS_AS(VolumeDensity::from_json({{"density", 1}, {"m", 1}}), ParseError);
}
