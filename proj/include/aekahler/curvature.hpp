#pragma once

// Ricci and scalar curvature of a radial Kahler metric from jets of
// log det = log(u (u + s u')).
//
// At z = (r, 0) the Ricci form -i dd-bar log det is diagonal with entries
//   fiber: -(L' + s L'')     base: -L'        (L = log det as a function of s)
// and scalar_curvature() is the trace fiber/(u + s u') + base/u.  That trace
// is the normalisation used by the closed forms of the three families; the
// Riemannian scalar curvature of the real metric is four times it.

#include <array>
#include <optional>
#include <ostream>
#include <vector>

#include "aekahler/profile.hpp"

namespace aek {

/// Riemannian scalar curvature divided by the complex Ricci trace.
inline constexpr double kRiemannianPerTrace = 4.0;

struct RadialCurvature {
  double u = 0.0;
  double eigen_fiber = 0.0;
  double ricci_fiber = 0.0;
  double ricci_base = 0.0;
  double trace() const { return ricci_fiber / eigen_fiber + ricci_base / u; }
};

/// From the jet of u at s, and optionally a closed-form jet of log det.
/// Throws NotKaehlerHere if the metric degenerates.
RadialCurvature radial_curvature(const Jet4& u, double s,
                                 const std::optional<Jet4>& log_det = std::nullopt);
/// Uses the profile's closed-form log det when it has one.
RadialCurvature radial_curvature(const RadialProfile& profile, const Jet4& u, double s);

struct CurvatureSample {
  double r = 0.0;
  /// (fiber direction z1, orthogonal direction z2) at z = (r, 0).
  std::array<double, 2> ricci_eigs{};
  double scalar = 0.0;
};

std::array<double, 2> ricci_eigenvalues(const RadialProfile& profile, double r);
/// Trace convention; r = 0 is the continuous extension.
double scalar_curvature(const RadialProfile& profile, double r);
/// kRiemannianPerTrace * scalar_curvature.
double riemannian_scalar(const RadialProfile& profile, double r);
CurvatureSample curvature_sample(const RadialProfile& profile, double r);

struct RicciBound {
  double inf_eig = 0.0;
  double argmin_r = 0.0;
};

/// Smallest Ricci eigenvalue over the grid; an interior grid minimum is
/// refined by Brent's method between its neighbours.
RicciBound ricci_lower_bound(const RadialProfile& profile, const std::vector<double>& r_grid,
                             bool refine = true);

void write_curvature_csv(std::ostream& out, const std::vector<CurvatureSample>& rows);

}  // namespace aek
