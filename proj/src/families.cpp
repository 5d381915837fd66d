#include "aekahler/families.hpp"

#include <algorithm>
#include <cmath>

#include "aekahler/errors.hpp"
#include "aekahler/format.hpp"
#include "aekahler/geometry.hpp"

namespace aek {

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::burns_log: return "burns_log";
    case FamilyKind::burns_log_prime: return "burns_log_prime";
    case FamilyKind::volume: return "volume";
  }
  return "?";
}

FamilyKind parse_family(const std::string& name) {
  std::string n = name;
  std::replace(n.begin(), n.end(), '-', '_');
  if (n == "burns_log") return FamilyKind::burns_log;
  if (n == "burns_log_prime") return FamilyKind::burns_log_prime;
  if (n == "volume") return FamilyKind::volume;
  throw UsageError("unknown family '" + name + "'");
}

void FamilySpec::validate() const {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw UsageError("lambda must be positive");
  if (log_coefficient && kind != FamilyKind::burns_log) {
    throw UsageError("a log coefficient only applies to burns_log");
  }
}

VolumeDensity volume_density(double lambda) {
  const Expression s = Expression::s();
  const Expression l = Expression::param("lambda");
  VolumeDensity d;
  d.f = (s + Expression::constant(10.0) * l) / (s + l);
  d.params = {{"lambda", lambda}};
  return d;
}

ProfilePtr make_profile(const FamilySpec& spec) {
  spec.validate();
  const Expression s = Expression::s();
  const Expression l = Expression::param("lambda");
  Params params = {{"lambda", spec.lambda}};
  switch (spec.kind) {
    case FamilyKind::burns_log: {
      Expression h = l;
      if (spec.log_coefficient) {
        params["h"] = *spec.log_coefficient;
        h = Expression::param("h");
      }
      return make_expression_profile("burns_log", s + h * log(s + l), params);
    }
    case FamilyKind::burns_log_prime:
      return make_expression_profile("burns_log_prime",
                                     s + l * log(s + Expression::constant(1.0)), params);
    case FamilyKind::volume:
      return solve_potential(volume_density(spec.lambda), "volume");
  }
  throw UsageError("unknown family");
}

OracleQuantity parse_oracle_quantity(const std::string& name) {
  if (name == "scalar") return OracleQuantity::scalar;
  if (name == "ricci_eig2") return OracleQuantity::ricci_eig2;
  if (name == "g_of_r") return OracleQuantity::g_of_r;
  if (name == "vol_ricci_eig2") return OracleQuantity::vol_ricci_eig2;
  throw UsageError("unknown oracle quantity '" + name + "'");
}

namespace {

double printed_g(double r, double l) {
  const double r2 = r * r;
  return 0.5 * r2 * r2 + 9.0 * l * r2 - 9.0 * l * l * std::log1p(r2 / l);
}

[[noreturn]] void unsupported(const FamilySpec& spec, const char* quantity) {
  throw UnsupportedPair("no closed form for (" + family_name(spec.kind) + ", " + quantity + ")");
}

}  // namespace

double closed_form_oracle(const FamilySpec& spec, OracleQuantity quantity, double r) {
  spec.validate();
  const double l = spec.lambda;
  const double r2 = r * r, r4 = r2 * r2, r6 = r4 * r2, r8 = r4 * r4;
  const double l2 = l * l, l3 = l2 * l, l4 = l2 * l2, l5 = l4 * l, l6 = l3 * l3;
  switch (spec.kind) {
    case FamilyKind::burns_log:
      if (spec.log_coefficient) unsupported(spec, "modified log coefficient");
      if (quantity == OracleQuantity::scalar) {
        const double q = r4 + 2.0 * l * r2 + 2.0 * l2;
        return (2.0 * l3 * r6 + 20.0 * l4 * r4 + 35.0 * l5 * r2 + 24.0 * l6) /
               ((r2 + 2.0 * l) * q * q * q);
      }
      if (quantity == OracleQuantity::ricci_eig2) {
        return (l * r4 + 4.0 * l2 * r2 + 6.0 * l3) /
               (r8 + 5.0 * l * r6 + 10.0 * l2 * r4 + 10.0 * l3 * r2 + 4.0 * l4);
      }
      unsupported(spec, quantity == OracleQuantity::g_of_r ? "g_of_r" : "vol_ricci_eig2");
    case FamilyKind::burns_log_prime:
      unsupported(spec, "any quantity");
    case FamilyKind::volume:
      if (quantity == OracleQuantity::g_of_r) return printed_g(r, l);
      if (quantity == OracleQuantity::vol_ricci_eig2) return 9.0 * l / ((r2 + l) * (r2 + 10.0 * l));
      if (quantity == OracleQuantity::scalar) {
        const double g = printed_g(r, l);
        const double c = r2 + 10.0 * l;
        return 9.0 * l * (r8 + 20.0 * l * r6 + 100.0 * l2 * r4 - 2.0 * g * r4 + 20.0 * g * l2) /
               (2.0 * r2 * (r2 + l) * c * c * c * g);
      }
      unsupported(spec, "ricci_eig2");
  }
  unsupported(spec, "?");
}

PrintedRicciInfimum printed_volume_ricci_infimum(double lambda) {
  const double a = std::cbrt(10.0);
  const double b = a * a;
  const double value = 9.0 * (10.0 - a - b) /
                       (lambda * (a + b + 1.0) * (a + b + 1.0) * (b + a + 10.0) * (b + a + 10.0));
  return {std::sqrt((b + a) * lambda), value};
}

std::vector<double> default_ricci_grid(double lambda, int n) {
  const double scale = std::sqrt(lambda);
  return log_points(1e-3 * std::min(1.0, scale), 1e2 * std::max(1.0, scale), n);
}

bool ricci_bounded_below_uniformly(const FamilySpec& spec) {
  const double here = ricci_lower_bound(*make_profile(spec), default_ricci_grid(spec.lambda)).inf_eig;
  FamilySpec smaller = spec;
  smaller.lambda = spec.lambda / 10.0;
  if (smaller.log_coefficient) smaller.log_coefficient = *spec.log_coefficient / 10.0;
  const double there =
      ricci_lower_bound(*make_profile(smaller), default_ricci_grid(smaller.lambda)).inf_eig;
  if (there >= 0.0) return true;
  if (here >= 0.0) return there > -1e-12;
  return there / here < 2.0;
}

FamilyReport family_report(const FamilySpec& spec, const Theorem11Spec& quadrature) {
  const ProfilePtr profile = make_profile(spec);
  FamilyReport rep;
  rep.spec = spec;
  rep.mass = mass_inequality_report(*profile, quadrature);
  rep.decay = estimate_decay(*profile);
  rep.ricci = ricci_lower_bound(*profile, default_ricci_grid(spec.lambda));
  rep.length01 = radial_length(*profile, 0.0, 1.0);
  rep.theorem_4_1_applicable = rep.decay.tau > 1.0 && rep.mass.mass_scalar_integral > 0.0;
  rep.theorem_4_4_applicable = rep.theorem_4_1_applicable && ricci_bounded_below_uniformly(spec);
  return rep;
}

void write_sweep_csv(std::ostream& out, const std::vector<FamilyReport>& rows) {
  out << "family,lambda,mass_scalar_integral,adm_flux,rhs_theorem11,slack,ricci_inf,tau,length01\n";
  for (const auto& r : rows) {
    out << family_name(r.spec.kind) << ',' << fmt17(r.spec.lambda) << ','
        << fmt17(r.mass.mass_scalar_integral) << ',' << fmt17(r.mass.adm_flux) << ','
        << fmt17(r.mass.rhs_theorem11) << ',' << fmt17(r.mass.slack) << ','
        << fmt17(r.ricci.inf_eig) << ',' << fmt17(r.decay.tau) << ',' << fmt17(r.length01)
        << '\n';
  }
}

}  // namespace aek
