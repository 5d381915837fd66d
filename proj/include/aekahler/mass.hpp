#pragma once

// ADM mass of an AE Kahler metric on C^2 by two independent routes, and the
// integral lower bound
//   m(g) >= 1/(12 pi^2) int (|Hess x1|^2/2 + |Hess x2|^2/2 + |grad x1|^2 R_g) dvol_g.
//
// The integrand of the bound is invariant under the torus acting by separate
// phase rotations of z1 and z2, so with z = r (cos t e^{ia}, sin t e^{ib}) the
// four-dimensional integral is 4 pi^2 int int F(r, t) r^3 cos t sin t dt dr.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "aekahler/profile.hpp"
#include "aekahler/quadrature.hpp"

namespace aek {

/// 1/(12 pi^2): Gamma(n/2) / (4 (n-1) pi^(n/2)) for n = 4, and also
/// (m-1)! / (4 (2m-1) pi^m) for m = 2.
double mass_normalisation();

/// The flux integral over the Euclidean sphere of radius rho, normalised.
double adm_flux_at_radius(const RadialProfile& profile, double rho,
                          const QuadratureSpec& spec = default_quadrature_spec());

struct FluxPoint {
  double rho = 0.0;
  double flux = 0.0;
};

struct AdmMass {
  double mass = 0.0;
  double error_estimate = 0.0;
  double tau = 0.0;
  std::vector<FluxPoint> sequence;
};

std::vector<double> default_rho_sequence();

/// Fits flux(rho) = m + c rho^-(2 tau - 2) by least squares.  tau comes from
/// estimate_decay unless given.  Throws ExtrapolationUnreliable when the tail
/// of the sequence is not monotone.
AdmMass adm_mass(const RadialProfile& profile,
                 const std::vector<double>& rhos = default_rho_sequence(),
                 std::optional<double> tau = std::nullopt);

/// 1/(12 pi^2) int R_g dvol_g over C^2.  Throws NotIntegrable if the fitted
/// tail exponent of R_g is not below -4.
double mass_scalar_integral(const RadialProfile& profile);

struct Theorem11Spec {
  QuadratureSpec outer;
  QuadratureSpec inner;
  Execution execution = Execution::serial;
};
Theorem11Spec default_theorem11_spec();

/// Right-hand side of the mass inequality.
double theorem11_rhs(const RadialProfile& profile,
                     const Theorem11Spec& spec = default_theorem11_spec());
/// 1/(12 pi^2) int (|Hess x1|^2 + |Hess x2|^2)/2 dvol_g.
double hessian_integral(const RadialProfile& profile,
                        const Theorem11Spec& spec = default_theorem11_spec());

struct MassReport {
  std::string family;
  double lambda = 0.0;
  double adm_flux = 0.0;
  double adm_flux_error = 0.0;
  std::vector<FluxPoint> adm_flux_sequence;
  double mass_scalar_integral = 0.0;
  double rhs_theorem11 = 0.0;
  double slack = 0.0;
  bool rigidity_flag = false;

  nlohmann::json to_json() const;
};

/// Below this a mass or Hessian integral counts as zero for the rigidity flag.
inline constexpr double kRigidityTolerance = 1e-12;

MassReport mass_inequality_report(const RadialProfile& profile,
                                  const Theorem11Spec& spec = default_theorem11_spec());

}  // namespace aek
