#pragma once

// Radial Kahler potentials phi(s), s = |z|^2, on C^2 and the metric data they
// determine.  Everything is expressed through u = phi'(s): the Hermitian form
// is h_{ij} = u delta_ij + u' conj(z_i) z_j with eigenvalues u (base) and
// u + s u' (fiber).

#include <array>
#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"

#include "aekahler/expression.hpp"
#include "aekahler/jet.hpp"

namespace aek {

/// Real coordinates (Re z1, Im z1, Re z2, Im z2).
using Point4 = std::array<double, 4>;

class RadialProfile {
 public:
  virtual ~RadialProfile() = default;

  /// Jet in s of u = phi'(s): value and derivatives u, u', ..., u''''.
  virtual Jet4 slope_jet(double s) const = 0;
  /// Jet of log(u (u + s u')) when the profile knows it in closed form.
  /// Curvature prefers it: far out the Ricci form is a small difference of
  /// terms built from u, and a closed form avoids that cancellation.
  virtual std::optional<Jet4> log_det_jet(double /*s*/) const { return std::nullopt; }
  /// phi(s) up to an additive constant.
  virtual double potential(double s) const = 0;
  virtual nlohmann::json to_json() const = 0;

  const std::string& label() const { return label_; }
  const Params& params() const { return params_; }
  /// Params lookup with a default.
  double param(const std::string& name, double fallback = 0.0) const;

 protected:
  RadialProfile(std::string label, Params params)
      : label_(std::move(label)), params_(std::move(params)) {}

 private:
  std::string label_;
  Params params_;
};

using ProfilePtr = std::shared_ptr<const RadialProfile>;

/// Profile given by a closed-form potential; u is its symbolic s-derivative.
class ExpressionProfile final : public RadialProfile {
 public:
  ExpressionProfile(std::string label, Expression potential, Params params);

  Jet4 slope_jet(double s) const override;
  double potential(double s) const override;
  nlohmann::json to_json() const override;

  const Expression& potential_expression() const { return potential_; }
  const Expression& slope_expression() const { return slope_; }

 private:
  Expression potential_;
  Expression slope_;
};

ProfilePtr make_expression_profile(std::string label, Expression potential, Params params = {});
ProfilePtr euclidean_profile();

/// Reads {label, params, potential} or a Monge-Ampere description
/// {label, params, m, beta0, density}.  Throws ParseError on bad input.
ProfilePtr profile_from_json(const nlohmann::json& j);
ProfilePtr load_profile_file(const std::string& path);

struct MetricSample {
  Point4 point{};
  Eigen::Matrix2cd hermitian;
  double eigen_base = 0.0;
  double eigen_fiber = 0.0;
  double det_ratio = 0.0;
};

/// Throws NotKaehlerHere if either eigenvalue is not positive at the point.
MetricSample metric_matrix(const RadialProfile& profile, const Point4& point);

struct PositivityReport {
  bool ok = true;
  std::optional<double> first_failing_s;
  /// "base", "fiber" or "evaluation" when not ok.
  std::string reason;
};

PositivityReport check_positivity(const RadialProfile& profile, const std::vector<double>& s_grid);

/// Log-spaced grid on [lo, hi] with the given density (points per decade).
std::vector<double> log_grid(double lo, double hi, int per_decade = 256);
/// Exactly n log-spaced points, endpoints included.
std::vector<double> log_points(double lo, double hi, int n);

/// Jets in t of every entry of the real metric along the line x + t v.
using MetricJet = std::array<std::array<Jet4, 4>, 4>;
MetricJet metric_jet_along(const RadialProfile& profile, const Point4& x, const Point4& v);
/// Same, from a precomputed jet of u at s = |x|^2.
MetricJet metric_jet_along(const Jet4& u, const Point4& x, const Point4& v);

struct RealMetricSample {
  Point4 point{};
  Eigen::Matrix4d g;
  /// dg[c](a, b) = d g_ab / d x_c.
  std::array<Eigen::Matrix4d, 4> dg;
};

/// Real tensor normalised so that phi = s gives the identity.
RealMetricSample real_metric_tensor(const RadialProfile& profile, const Point4& point);
/// No positivity check; u is the jet of u at s = |point|^2.
RealMetricSample real_metric_tensor(const Jet4& u, const Point4& point);

struct DecayEstimate {
  double b = 0.0;
  double tau = 0.0;
  double residual = 0.0;
  /// Fitted exponents of |d^k (g - delta)|, k = 0, 1, 2; ideally tau + k.
  std::array<double, 3> slopes{};
};

/// Least-squares fit of log sup |d^k(g - delta)| over sample spheres in
/// [r_lo, r_hi].  Throws ExactlyFlat when the deviation vanishes.
DecayEstimate estimate_decay(const RadialProfile& profile, double r_lo = 1e2, double r_hi = 1e4,
                             int samples = 9);

}  // namespace aek
