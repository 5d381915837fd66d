#pragma once

// The three explicit families on C^2:
//   burns_log        phi = s + lambda log(s + lambda)
//   burns_log_prime  phi = s + lambda log(s + 1)
//   volume           u solves the Monge-Ampere equation for f = (s + 10 lambda)/(s + lambda)
// together with their closed-form curvature expressions, used as test oracles.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "aekahler/curvature.hpp"
#include "aekahler/mass.hpp"
#include "aekahler/monge_ampere.hpp"
#include "aekahler/profile.hpp"

namespace aek {

enum class FamilyKind { burns_log, burns_log_prime, volume };

std::string family_name(FamilyKind kind);
/// Accepts underscores or hyphens.  Throws UsageError otherwise.
FamilyKind parse_family(const std::string& name);

struct FamilySpec {
  FamilyKind kind = FamilyKind::burns_log;
  double lambda = 1.0;
  /// burns_log only: replaces the factor lambda in front of the logarithm.
  /// Nonnegative scalar curvature is expected for h <= 1.5 lambda; this is
  /// recorded in the profile params but not enforced.
  std::optional<double> log_coefficient;

  void validate() const;
};

ProfilePtr make_profile(const FamilySpec& spec);
/// f_lambda = (s + 10 lambda)/(s + lambda).
VolumeDensity volume_density(double lambda);

enum class OracleQuantity { scalar, ricci_eig2, g_of_r, vol_ricci_eig2 };
OracleQuantity parse_oracle_quantity(const std::string& name);

/// Literal evaluation of a printed closed form.  Throws UnsupportedPair when
/// no formula exists for the combination.
double closed_form_oracle(const FamilySpec& spec, OracleQuantity quantity, double r);

/// Location and value of the printed infimum of the volume family's Ricci
/// curvature.
struct PrintedRicciInfimum {
  double r_min;
  double value;
};
PrintedRicciInfimum printed_volume_ricci_infimum(double lambda);

/// Radii covering both the scale sqrt(lambda) and the unit scale.
std::vector<double> default_ricci_grid(double lambda, int n = 400);

struct FamilyReport {
  FamilySpec spec;
  MassReport mass;
  DecayEstimate decay;
  RicciBound ricci;
  double length01 = 0.0;
  bool theorem_4_1_applicable = false;
  bool theorem_4_4_applicable = false;
};

/// True when the Ricci lower bound does not degrade as lambda shrinks: the
/// infimum at lambda/10 is less than twice as negative as at lambda.
bool ricci_bounded_below_uniformly(const FamilySpec& spec);

FamilyReport family_report(const FamilySpec& spec,
                           const Theorem11Spec& quadrature = default_theorem11_spec());

void write_sweep_csv(std::ostream& out, const std::vector<FamilyReport>& rows);

}  // namespace aek
