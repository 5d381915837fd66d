#include "doctest.h"

#include <cmath>

#include "aekahler/families.hpp"
#include "aekahler/geometry.hpp"

using namespace aek;

TEST_CASE("Christoffel symbols of burns_log at (1, 0, 0, 0)") {
  const auto p = make_profile({FamilyKind::burns_log, 1.0, std::nullopt});
  const ConnectionSample c = christoffels(*p, {1.0, 0.0, 0.0, 0.0});
  double want[4][4][4] = {};
  auto set = [&want](int k, int i, int j, double v) { want[k][i][j] = want[k][j][i] = v; };
  set(0, 0, 0, -0.2);
  set(0, 1, 1, 0.2);
  set(1, 0, 1, -0.2);
  set(2, 0, 2, -1.0 / 6.0);
  set(2, 1, 3, 1.0 / 6.0);
  set(3, 0, 3, -1.0 / 6.0);
  set(3, 1, 2, -1.0 / 6.0);
  for (int k = 0; k < 4; ++k)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        CAPTURE(k);
        CAPTURE(i);
        CAPTURE(j);
        CHECK(c.christoffel[k](i, j) == doctest::Approx(want[k][i][j]).epsilon(1e-14).scale(1.0));
      }
  CHECK(c.inverse_metric.diagonal()(0) == doctest::Approx(0.8));
  CHECK(c.inverse_metric.diagonal()(2) == doctest::Approx(2.0 / 3.0));
  const HessianNorms h = coordinate_hessian_norms(c);
  CHECK(h.h1 == doctest::Approx(32.0 / 625.0).epsilon(1e-14));
  CHECK(h.h2 == doctest::Approx(32.0 / 625.0).epsilon(1e-14));
  CHECK(h.grad1 == doctest::Approx(0.8).epsilon(1e-15));
}

TEST_CASE("Christoffel symbols off the axis, sympy from the real metric") {
  const auto p = make_profile({FamilyKind::burns_log, 0.5, std::nullopt});
  const ConnectionSample c = christoffels(*p, {0.3, -0.2, 0.5, 0.1});
  CHECK(c.christoffel[0](0, 0) == doctest::Approx(-0.21557857571861212).epsilon(1e-13));
  CHECK(c.christoffel[0](1, 2) == doctest::Approx(-0.031442420720905089).epsilon(1e-13));
  CHECK(c.christoffel[1](2, 3) == doctest::Approx(0.035898735190908783).epsilon(1e-13));
  CHECK(c.christoffel[2](0, 2) == doctest::Approx(-0.067403210769533680).epsilon(1e-13));
  CHECK(c.christoffel[3](3, 3) == doctest::Approx(-0.062884841441810179).epsilon(1e-13));
  CHECK(c.christoffel[2](1, 3) == doctest::Approx(0.067403210769533680).epsilon(1e-13));
}

TEST_CASE("property: symmetric lower indices and metric compatibility") {
  for (auto k : {FamilyKind::burns_log, FamilyKind::burns_log_prime, FamilyKind::volume})
    for (const Point4& x : {Point4{0.2, 0.4, -0.1, 0.3}, Point4{2.0, -1.0, 0.5, 3.0}}) {
      const ConnectionSample c = christoffels(*make_profile({k, 0.7, std::nullopt}), x);
      for (int m = 0; m < 4; ++m) CHECK((c.christoffel[m] - c.christoffel[m].transpose()).norm() < 1e-15);
      CHECK(c.compatibility_residual < 1e-12);
      CHECK((c.metric * c.inverse_metric - Eigen::Matrix4d::Identity()).norm() < 1e-13);
    }
}

TEST_CASE("flat space has no connection") {
  const ConnectionSample c = christoffels(*euclidean_profile(), {1.0, 2.0, 3.0, 4.0});
  for (const auto& g : c.christoffel) CHECK(g.norm() == 0.0);
  const HessianNorms h = coordinate_hessian_norms(c);
  CHECK(h.h1 == 0.0);
  CHECK(h.h2 == 0.0);
  CHECK(h.grad1 == 1.0);
}

TEST_CASE("radial lengths") {
  CHECK(radial_length(*make_profile({FamilyKind::burns_log, 1.0, std::nullopt}), 0.0, 1.0) ==
        doctest::Approx(1.27797805927793441856705662303).epsilon(1e-11));
  CHECK(radial_length(*make_profile({FamilyKind::burns_log, 0.5, std::nullopt}), 0.0, 1.0) ==
        doctest::Approx(1.2205137773497730578948283382).epsilon(1e-11));
  CHECK(radial_length(*euclidean_profile(), 0.5, 3.0) == doctest::Approx(2.5).epsilon(1e-14));
  for (auto k : {FamilyKind::burns_log, FamilyKind::burns_log_prime, FamilyKind::volume}) {
    double last = INFINITY;
    for (double l : {1.0, 1e-2, 1e-4}) {
      const double len = radial_length(*make_profile({k, l, std::nullopt}), 0.0, 1.0);
      CHECK(len >= 1.0);
      CHECK(len < last);
      last = len;
    }
  }
}
