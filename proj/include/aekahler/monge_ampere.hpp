#pragma once

// Radial complex Monge-Ampere: given a volume density f(s), find u = phi'(s)
// with u^(m-1) (u + s u') = f.  Equivalently (s u)^m = beta0 + int_0^s m t^(m-1) f(t) dt.
//
// The solver writes s^-m int_0^s m t^(m-1) f(t) dt = int_0^1 m tau^(m-1) f(s tau) dtau
// = Q(s), so u = (Q + beta0 s^-m)^(1/m).  The derivatives of Q are integrals of
// the derivatives of f against the same weight, which gives the jet of u with
// no differentiation of a quadrature result and no 0/0 at the origin.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "aekahler/expression.hpp"
#include "aekahler/profile.hpp"
#include "aekahler/quadrature.hpp"

namespace aek {

struct VolumeDensity {
  Expression f;
  Params params;
  int m = 2;
  /// Integration constants of the potential; r0 and t0 only shift phi.
  double r0 = 0.0;
  double t0 = 0.0;
  double beta0 = 0.0;

  void validate() const;
  Jet4 eval(const Jet4& s) const { return f.eval(s, params); }
  double eval(double s) const { return f.eval(s, params); }

  nlohmann::json to_json() const;
  /// Accepts {density, params?, m?, beta0?, r0?, t0?}; ParseError on bad input.
  static VolumeDensity from_json(const nlohmann::json& j);
};

VolumeDensity load_density_file(const std::string& path);

/// Quadrature tolerances used for the radicand.  Tighter than the library
/// default because curvature needs four accurate derivatives of u.
QuadratureSpec monge_ampere_quadrature_spec();

class MongeAmpereProfile final : public RadialProfile {
 public:
  MongeAmpereProfile(std::string label, VolumeDensity density, QuadratureSpec spec);

  Jet4 slope_jet(double s) const override;
  /// For m = 2 the determinant equals f, so log det is log f in closed form.
  std::optional<Jet4> log_det_jet(double s) const override;
  /// Integral of u from 0 to s plus t0.
  double potential(double s) const override;
  nlohmann::json to_json() const override;

  const VolumeDensity& density() const { return density_; }
  /// Jet of Q(s) = int_0^1 m tau^(m-1) f(s tau) dtau.
  Jet4 radicand_jet(double s) const;

 private:
  VolumeDensity density_;
  QuadratureSpec spec_;
};

/// Throws InvalidDensity if the radicand is not positive where evaluated
/// or if f is not positive at the origin.
ProfilePtr solve_potential(const VolumeDensity& density, std::string label = "monge-ampere",
                           const QuadratureSpec& spec = monge_ampere_quadrature_spec());

/// max over the grid of |u^(m-1) (u + s u') - f(s)|.
double verify_volume(const RadialProfile& profile, const VolumeDensity& density,
                     const std::vector<double>& s_grid);

}  // namespace aek
