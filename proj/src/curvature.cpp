#include "aekahler/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/tools/minima.hpp>

#include "aekahler/errors.hpp"
#include "aekahler/format.hpp"

namespace aek {

RadialCurvature radial_curvature(const Jet4& u, double s, const std::optional<Jet4>& log_det) {
  const Jet4 S = Jet4::variable(s);
  const Jet4 ef = u + S * u.derivative();
  if (!(u[0] > 0.0) || !(ef[0] > 0.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "metric not positive definite at s = " << s;
    throw NotKaehlerHere(msg.str(), s);
  }
  const Jet4 L = log_det ? *log_det : log(u * ef);
  RadialCurvature c;
  c.u = u[0];
  // With log det known, u + s u' = det/u avoids cancelling u against s u'.
  c.eigen_fiber = log_det ? std::exp(L[0]) / u[0] : ef[0];
  c.ricci_fiber = -(L[1] + s * L[2]);
  c.ricci_base = -L[1];
  return c;
}

namespace {

RadialCurvature at_radius(const RadialProfile& profile, double r) {
  if (!(r >= 0.0)) throw UsageError("curvature: radius must be non-negative");
  const double s = r * r;
  return radial_curvature(profile, profile.slope_jet(s), s);
}

}  // namespace

RadialCurvature radial_curvature(const RadialProfile& profile, const Jet4& u, double s) {
  return radial_curvature(u, s, profile.log_det_jet(s));
}

std::array<double, 2> ricci_eigenvalues(const RadialProfile& profile, double r) {
  const RadialCurvature c = at_radius(profile, r);
  return {c.ricci_fiber, c.ricci_base};
}

double scalar_curvature(const RadialProfile& profile, double r) {
  return at_radius(profile, r).trace();
}

double riemannian_scalar(const RadialProfile& profile, double r) {
  return kRiemannianPerTrace * scalar_curvature(profile, r);
}

CurvatureSample curvature_sample(const RadialProfile& profile, double r) {
  const RadialCurvature c = at_radius(profile, r);
  return {r, {c.ricci_fiber, c.ricci_base}, c.trace()};
}

RicciBound ricci_lower_bound(const RadialProfile& profile, const std::vector<double>& r_grid,
                             bool refine) {
  if (r_grid.empty()) throw UsageError("ricci_lower_bound: empty grid");
  auto smaller = [&profile](double r) {
    const auto e = ricci_eigenvalues(profile, r);
    return std::min(e[0], e[1]);
  };
  std::size_t best = 0;
  double best_value = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    const double v = smaller(r_grid[i]);
    if (v < best_value) {
      best_value = v;
      best = i;
    }
  }
  RicciBound out{best_value, r_grid[best]};
  if (refine && best > 0 && best + 1 < r_grid.size()) {
    const auto [r, v] = boost::math::tools::brent_find_minima(
        smaller, r_grid[best - 1], r_grid[best + 1], std::numeric_limits<double>::digits / 2);
    if (v < out.inf_eig) out = {v, r};
  }
  return out;
}

void write_curvature_csv(std::ostream& out, const std::vector<CurvatureSample>& rows) {
  out << "r,ricci_eig_1,ricci_eig_2,scalar\n";
  for (const auto& c : rows) {
    out << fmt17(c.r) << ',' << fmt17(c.ricci_eigs[0]) << ',' << fmt17(c.ricci_eigs[1]) << ','
        << fmt17(c.scalar) << '\n';
  }
}

}  // namespace aek
