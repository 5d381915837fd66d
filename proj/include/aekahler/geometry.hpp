#pragma once

// Levi-Civita connection of the real metric, Hessians of the coordinate
// functions x1 = Re z1 and x2 = Im z1, and lengths of radial segments.

#include <array>

#include <Eigen/Dense>

#include "aekahler/profile.hpp"
#include "aekahler/quadrature.hpp"

namespace aek {

struct ConnectionSample {
  Point4 point{};
  /// christoffel[k](i, j) = Gamma^k_ij.
  std::array<Eigen::Matrix4d, 4> christoffel;
  Eigen::Matrix4d metric;
  Eigen::Matrix4d inverse_metric;
  /// max_{k,i,j} |d_k g_ij - Gamma^l_ki g_lj - Gamma^l_kj g_il|.
  double compatibility_residual = 0.0;
};

ConnectionSample christoffels(const RadialProfile& profile, const Point4& point);
/// From the jet of u at s = |point|^2; no positivity check.
ConnectionSample christoffels(const Jet4& u, const Point4& point);

struct HessianNorms {
  double h1 = 0.0;     // |Hess x1|^2
  double h2 = 0.0;     // |Hess x2|^2
  double grad1 = 0.0;  // |grad x1|^2 = g^{11}
};

/// Hess(x_i)_ab = -Gamma^i_ab for a coordinate function.
HessianNorms coordinate_hessian_norms(const ConnectionSample& c);
HessianNorms coordinate_hessian_norms(const RadialProfile& profile, const Point4& point);

/// Length of the segment t -> (t, 0, 0, 0), r_from <= t <= r_to.  By the
/// rotational symmetry this segment is the minimising geodesic between its
/// endpoints.
double radial_length(const RadialProfile& profile, double r_from, double r_to,
                     const QuadratureSpec& spec = default_quadrature_spec());

}  // namespace aek
