#include "doctest.h"

#include <cmath>

#include "aekahler/errors.hpp"
#include "aekahler/jet.hpp"

using aek::Jet4;

namespace {

void check_jet(const Jet4& j, std::array<double, 5> want, double tol = 1e-13) {
  for (int k = 0; k <= 4; ++k) {
    CAPTURE(k);
    CHECK(j[k] == doctest::Approx(want[static_cast<std::size_t>(k)]).epsilon(tol).scale(1.0));
  }
}

}  // namespace

TEST_CASE("jet of log(x^2 + 1) at 0") {
  const Jet4 x = Jet4::variable(0.0);
  check_jet(aek::log(x * x + 1.0), {0.0, 0.0, 2.0, 0.0, -12.0});
}

TEST_CASE("jet of x^x at 1") {
  // sympy: derivatives of x**x at 1 are 1, 1, 2, 3, 8
  const Jet4 x = Jet4::variable(1.0);
  check_jet(aek::pow(x, x), {1.0, 1.0, 2.0, 3.0, 8.0});
}

TEST_CASE("reciprocal and quotient") {
  const Jet4 x = Jet4::variable(1.0);
  check_jet(1.0 / (1.0 + x), {0.5, -0.25, 0.25, -0.375, 0.75});
  check_jet((x * x) / x, {1.0, 1.0, 0.0, 0.0, 0.0});
}

TEST_CASE("exp and sqrt compose") {
  const Jet4 x = Jet4::variable(0.0);
  check_jet(aek::exp(2.0 * x), {1.0, 2.0, 4.0, 8.0, 16.0});
  // sqrt(1 + x): 1, 1/2, -1/4, 3/8, -15/16
  check_jet(aek::sqrt(1.0 + x), {1.0, 0.5, -0.25, 0.375, -0.9375});
}

TEST_CASE("integer powers of negative base are allowed") {
  const Jet4 x = Jet4::variable(-2.0);
  check_jet(aek::pow(x, 3.0), {-8.0, 12.0, -12.0, 6.0, 0.0});
}

TEST_CASE("derivative shifts the jet and poisons the unknown top term") {
  const Jet4 d = Jet4(1.0, 2.0, 3.0, 4.0, 5.0).derivative();
  for (int k = 0; k < 4; ++k) CHECK(d[k] == k + 2.0);
  CHECK(std::isnan(d[4]));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(aek::log(Jet4::variable(-1.0)), aek::EvaluationError);
  CHECK_THROWS_AS(aek::sqrt(Jet4::variable(0.0)), aek::EvaluationError);
  CHECK_THROWS_AS(1.0 / Jet4::variable(0.0), aek::EvaluationError);
  CHECK_THROWS_AS(aek::pow(Jet4::variable(-1.0), 0.5), aek::EvaluationError);
}

TEST_CASE("property: product rule against finite differences") {
  for (double x0 : {0.3, 1.1, 2.7}) {
    const Jet4 x = Jet4::variable(x0);
    const Jet4 f = aek::exp(x) * aek::log(1.0 + x * x);
    const double h = 1e-5;
    auto g = [](double t) { return std::exp(t) * std::log(1.0 + t * t); };
    CHECK(f[1] == doctest::Approx((g(x0 + h) - g(x0 - h)) / (2 * h)).epsilon(1e-8));
    CHECK(f[2] == doctest::Approx((g(x0 + h) - 2 * g(x0) + g(x0 - h)) / (h * h)).epsilon(1e-4));
  }
}
