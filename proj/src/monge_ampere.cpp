#include "aekahler/monge_ampere.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "aekahler/errors.hpp"

namespace aek {

void VolumeDensity::validate() const {
  if (m < 2) throw UsageError("density: complex dimension m must be at least 2");
  if (!std::isfinite(beta0) || !std::isfinite(r0) || !std::isfinite(t0)) {
    throw UsageError("density: integration constants must be finite");
  }
}

nlohmann::json VolumeDensity::to_json() const {
  return nlohmann::json{{"density", f.to_json()}, {"params", params}, {"m", m},
                        {"beta0", beta0},         {"r0", r0},         {"t0", t0}};
}

VolumeDensity VolumeDensity::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("/: density must be a JSON object");
  if (!j.contains("density")) throw ParseError("/: missing 'density'");
  VolumeDensity d;
  d.f = Expression::from_json(j["density"], "/density");
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw ParseError("/params: expected an object");
    for (const auto& [key, value] : j["params"].items()) {
      if (!value.is_number()) throw ParseError("/params/" + key + ": expected a number");
      d.params[key] = value.get<double>();
    }
  }
  auto number = [&j](const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j[key].is_number()) throw ParseError(std::string("/") + key + ": expected a number");
    return j[key].get<double>();
  };
  if (j.contains("m")) {
    if (!j["m"].is_number_integer()) throw ParseError("/m: expected an integer");
    d.m = j["m"].get<int>();
  }
  d.beta0 = number("beta0", 0.0);
  d.r0 = number("r0", 0.0);
  d.t0 = number("t0", 0.0);
  try {
    d.validate();
  } catch (const UsageError& e) {
    throw ParseError(std::string("/: ") + e.what());
  }
  return d;
}

VolumeDensity load_density_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open density file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return VolumeDensity::from_json(j);
}

QuadratureSpec monge_ampere_quadrature_spec() {
  QuadratureSpec spec;
  spec.abs_tol = 1e-15;
  spec.rel_tol = 1e-13;
  spec.max_depth = 60;
  return spec;
}

MongeAmpereProfile::MongeAmpereProfile(std::string label, VolumeDensity density,
                                       QuadratureSpec spec)
    : RadialProfile(std::move(label), density.params),
      density_(std::move(density)),
      spec_(spec) {}

Jet4 MongeAmpereProfile::radicand_jet(double s) const {
  const double m = density_.m;
  if (s == 0.0) {
    const Jet4 f0 = density_.eval(Jet4::variable(0.0));
    Jet4 q;
    for (int k = 0; k <= Jet4::kOrder; ++k) q[k] = f0[k] * m / (m + k);
    return q;
  }
  if (!(s > 0.0)) throw UsageError("radicand evaluated at negative s");
  // Component k carries sigma^k Q^(k)(s) so that all components are O(1).
  const double sigma = std::max(s, 1.0);
  const auto integrand = [&](double tau) {
    const Jet4 f = density_.eval(Jet4::variable(s * tau));
    const double w = m * std::pow(tau, m - 1.0);
    Jet4 out;
    out[0] = w * (f[0] - 1.0);
    double scale = 1.0;
    for (int k = 1; k <= Jet4::kOrder; ++k) {
      scale *= sigma * tau;
      out[k] = w * scale * f[k];
    }
    return out;
  };
  const JetQuadratureResult r = integrate_jet(integrand, 0.0, 1.0, spec_);
  Jet4 q = r.value;
  q[0] += 1.0;
  double scale = 1.0;
  for (int k = 1; k <= Jet4::kOrder; ++k) {
    scale *= sigma;
    q[k] /= scale;
  }
  return q;
}

Jet4 MongeAmpereProfile::slope_jet(double s) const {
  Jet4 q = radicand_jet(s);
  if (density_.beta0 != 0.0) {
    if (!(s > 0.0)) throw EvaluationError("beta0 != 0 makes the potential singular at s = 0");
    q += density_.beta0 * pow(Jet4::variable(s), -static_cast<double>(density_.m));
  }
  if (!(q[0] > 0.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "Monge-Ampere radicand is not positive at s = " << s << " (value " << q[0] << ")";
    throw InvalidDensity(msg.str());
  }
  return pow(q, 1.0 / density_.m);
}

std::optional<Jet4> MongeAmpereProfile::log_det_jet(double s) const {
  if (density_.m != 2) return std::nullopt;
  return log(density_.eval(Jet4::variable(s)));
}

double MongeAmpereProfile::potential(double s) const {
  if (s == 0.0) return density_.t0;
  return density_.t0 + integrate([this](double t) { return slope_jet(t)[0]; }, 0.0, s).value;
}

nlohmann::json MongeAmpereProfile::to_json() const {
  nlohmann::json j = density_.to_json();
  j["label"] = label();
  return j;
}

ProfilePtr solve_potential(const VolumeDensity& density, std::string label,
                           const QuadratureSpec& spec) {
  density.validate();
  spec.validate();
  double f0 = 0.0;
  double far = 0.0;
  try {
    f0 = density.eval(0.0);
    far = density.eval(1e12);
  } catch (const EvaluationError& e) {
    throw InvalidDensity(std::string("density cannot be evaluated: ") + e.what());
  }
  if (!(f0 > 0.0)) throw InvalidDensity("density must be positive at the origin");
  if (!(std::fabs(far - 1.0) < 1e-2)) {
    throw InvalidDensity("density must tend to 1 at infinity (asymptotically Euclidean volume)");
  }
  auto profile = std::make_shared<MongeAmpereProfile>(std::move(label), density, spec);
  profile->slope_jet(1.0);
  return profile;
}

double verify_volume(const RadialProfile& profile, const VolumeDensity& density,
                     const std::vector<double>& s_grid) {
  double worst = 0.0;
  for (double s : s_grid) {
    const Jet4 u = profile.slope_jet(s);
    const double det = std::pow(u[0], density.m - 1) * (u[0] + s * u[1]);
    worst = std::max(worst, std::fabs(det - density.eval(s)));
  }
  return worst;
}

}  // namespace aek
