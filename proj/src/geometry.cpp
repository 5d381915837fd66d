#include "aekahler/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "aekahler/errors.hpp"

namespace aek {

ConnectionSample christoffels(const Jet4& u, const Point4& point) {
  const RealMetricSample m = real_metric_tensor(u, point);
  ConnectionSample c;
  c.point = point;
  c.metric = m.g;
  c.inverse_metric = m.g.inverse();
  // first[l](i, j) = 1/2 (d_j g_li + d_i g_lj - d_l g_ij)
  std::array<Eigen::Matrix4d, 4> first;
  for (int l = 0; l < 4; ++l) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        first[l](i, j) = 0.5 * (m.dg[j](l, i) + m.dg[i](l, j) - m.dg[l](i, j));
      }
    }
  }
  for (int k = 0; k < 4; ++k) {
    c.christoffel[k].setZero();
    for (int l = 0; l < 4; ++l) c.christoffel[k] += c.inverse_metric(k, l) * first[l];
  }
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) {
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        double r = m.dg[k](i, j);
        for (int l = 0; l < 4; ++l) {
          r -= c.christoffel[l](k, i) * m.g(l, j) + c.christoffel[l](k, j) * m.g(i, l);
        }
        worst = std::max(worst, std::fabs(r));
      }
    }
  }
  c.compatibility_residual = worst;
  return c;
}

ConnectionSample christoffels(const RadialProfile& profile, const Point4& point) {
  metric_matrix(profile, point);
  const double s = point[0] * point[0] + point[1] * point[1] + point[2] * point[2] +
                   point[3] * point[3];
  return christoffels(profile.slope_jet(s), point);
}

HessianNorms coordinate_hessian_norms(const ConnectionSample& c) {
  const Eigen::Matrix4d& gi = c.inverse_metric;
  auto norm2 = [&gi](const Eigen::Matrix4d& h) { return (gi * h * gi * h).trace(); };
  return {norm2(c.christoffel[0]), norm2(c.christoffel[1]), gi(0, 0)};
}

HessianNorms coordinate_hessian_norms(const RadialProfile& profile, const Point4& point) {
  return coordinate_hessian_norms(christoffels(profile, point));
}

double radial_length(const RadialProfile& profile, double r_from, double r_to,
                     const QuadratureSpec& spec) {
  if (!(r_from >= 0.0) || !(r_to > r_from)) {
    throw UsageError("radial_length: need 0 <= r_from < r_to");
  }
  const auto speed = [&profile](double t) {
    const double s = t * t;
    const Jet4 u = profile.slope_jet(s);
    const double g11 = u[0] + s * u[1];
    if (!(g11 > 0.0)) throw NotKaehlerHere("metric degenerates on the radial segment", s);
    return std::sqrt(g11);
  };
  return integrate(speed, r_from, r_to, spec).value;
}

}  // namespace aek
