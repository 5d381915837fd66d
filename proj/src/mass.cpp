#include "aekahler/mass.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/constants/constants.hpp>

#include "aekahler/curvature.hpp"
#include "aekahler/errors.hpp"
#include "aekahler/geometry.hpp"

namespace aek {
namespace {

constexpr double kPi = boost::math::constants::pi<double>();
constexpr double kHalfPi = boost::math::constants::half_pi<double>();

// Radial integrals are split at these radii so that features at the scale
// sqrt(lambda) are bracketed for every lambda of interest.
const std::vector<double> kRadialBreaks = {1e-3, 1e-2, 1e-1, 1.0, 10.0, 100.0, 1000.0};

double det_ratio(const Jet4& u, double s) { return u[0] * (u[0] + s * u[1]); }

// Curvature far out is a near-cancellation of the two Ricci eigenvalues, with
// relative roundoff growing like s / lambda.  Radial integrals of curvature are
// therefore done numerically up to r_end and by a power-law tail beyond it.
// The range shrinks with the profile's length scale when it has one.
double curvature_cutoff(const RadialProfile& profile) {
  return kRadialBreaks.back() * std::min(1.0, std::sqrt(profile.param("lambda", 1.0)));
}

std::vector<double> breaks_below(double r_end) {
  std::vector<double> out;
  for (double b : kRadialBreaks) {
    if (b < r_end) out.push_back(b);
  }
  out.push_back(r_end);
  return out;
}

// Integral of g over [r_end, inf) from a log-log fit on the decade below
// r_end.  NotIntegrable if g does not decay faster than 1/r.
double power_law_tail(const std::function<double(double)>& g, double r_end, const char* what) {
  std::vector<double> logr, logg;
  int sign = 0;
  for (double r : log_points(0.1 * r_end, r_end, 5)) {
    const double v = g(r);
    if (v != 0.0) {
      logr.push_back(std::log(r));
      logg.push_back(std::log(std::fabs(v)));
      sign = v > 0.0 ? 1 : -1;
    }
  }
  if (logr.size() < 2) return 0.0;
  const double n = static_cast<double>(logr.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < logr.size(); ++i) {
    mx += logr[i];
    my += logg[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < logr.size(); ++i) {
    sxx += (logr[i] - mx) * (logr[i] - mx);
    sxy += (logr[i] - mx) * (logg[i] - my);
  }
  const double slope = sxy / sxx;
  if (!(slope < -1.0)) {
    std::ostringstream msg;
    msg << what << " decays like r^" << slope << " in the volume element, not integrable";
    throw NotIntegrable(msg.str());
  }
  const double at_end = std::exp(my + slope * (std::log(r_end) - mx));
  return sign * at_end * r_end / (-(slope + 1.0));
}

// Coarse pass first, then abs_tol relative to the whole integral: per-piece
// tolerances would chase roundoff in the far pieces.
template <class Finite>
double two_pass(const QuadratureSpec& fine, double tail, const Finite& finite) {
  QuadratureSpec coarse = fine;
  coarse.abs_tol = 1e-9;
  coarse.rel_tol = 1e-7;
  const double rough = finite(coarse) + tail;
  QuadratureSpec spec = fine;
  spec.abs_tol = std::max(fine.abs_tol, 1e-9 * std::fabs(rough));
  return finite(spec) + tail;
}

// Integrates density(connection, curvature) over C^2 with the torus reduction.
template <class Density>
double reduced_volume_integral(const RadialProfile& profile, const Theorem11Spec& spec,
                               const Density& density, const char* what) {
  auto rows = [&profile, &density](double r) {
    const double s = r * r;
    const Jet4 u = profile.slope_jet(s);
    const double weight = mass_normalisation() * 4.0 * kPi * kPi * r * r * r * det_ratio(u, s);
    const RadialCurvature curv = radial_curvature(profile, u, s);
    return std::function<double(double)>([=, &density](double t) {
      const double c = std::cos(t), sn = std::sin(t);
      const Point4 x = {r * c, 0.0, r * sn, 0.0};
      const ConnectionSample conn = christoffels(u, x);
      return weight * c * sn * density(conn, curv);
    });
  };
  const double r_end = curvature_cutoff(profile);
  const std::vector<double> breaks = breaks_below(r_end);
  const double tail = power_law_tail(
      [&](double r) { return integrate(rows(r), 0.0, kHalfPi, spec.inner).value; }, r_end, what);
  return two_pass(spec.outer, tail, [&](const QuadratureSpec& outer) {
    double total = 0.0, lo = 0.0;
    for (double hi : breaks) {
      total += integrate_2d_rows(rows, {lo, hi}, {0.0, kHalfPi}, outer, spec.inner,
                                 spec.execution)
                   .value;
      lo = hi;
    }
    return total;
  });
}

}  // namespace

double mass_normalisation() { return 1.0 / (12.0 * kPi * kPi); }

double adm_flux_at_radius(const RadialProfile& profile, double rho, const QuadratureSpec& spec) {
  if (!(rho > 0.0)) throw UsageError("adm_flux_at_radius: rho must be positive");
  metric_matrix(profile, {rho, 0.0, 0.0, 0.0});
  const Jet4 u = profile.slope_jet(rho * rho);
  const double scale = mass_normalisation() * 4.0 * kPi * kPi * rho * rho * rho;
  auto integrand = [&](double t) {
    const double c = std::cos(t), sn = std::sin(t);
    const Point4 x = {rho * c, 0.0, rho * sn, 0.0};
    const RealMetricSample m = real_metric_tensor(u, x);
    double flux = 0.0;
    for (int l = 0; l < 4; ++l) {
      double term = 0.0;
      for (int k = 0; k < 4; ++k) term += m.dg[k](k, l) - m.dg[l](k, k);
      flux += term * x[l] / rho;
    }
    return scale * c * sn * flux;
  };
  return integrate(integrand, 0.0, kHalfPi, spec).value;
}

std::vector<double> default_rho_sequence() { return {30.0, 100.0, 300.0, 1000.0, 3000.0}; }

AdmMass adm_mass(const RadialProfile& profile, const std::vector<double>& rhos,
                 std::optional<double> tau) {
  if (rhos.size() < 3) throw UsageError("adm_mass: need at least three radii");
  for (std::size_t i = 1; i < rhos.size(); ++i) {
    if (!(rhos[i] > rhos[i - 1]) || !(rhos[0] > 0.0)) {
      throw UsageError("adm_mass: radii must be positive and increasing");
    }
  }
  AdmMass out;
  double biggest = 0.0;
  for (double rho : rhos) {
    out.sequence.push_back({rho, adm_flux_at_radius(profile, rho)});
    biggest = std::max(biggest, std::fabs(out.sequence.back().flux));
  }
  if (biggest == 0.0) return out;

  out.tau = tau ? *tau : estimate_decay(profile).tau;
  const double p = 2.0 * out.tau - 2.0;
  if (!(p > 0.0)) {
    throw ExtrapolationUnreliable("adm_mass: decay rate tau <= 1 gives no convergent tail");
  }
  const std::size_t n = out.sequence.size();
  const double d1 = out.sequence[n - 2].flux - out.sequence[n - 3].flux;
  const double d2 = out.sequence[n - 1].flux - out.sequence[n - 2].flux;
  const double noise = 1e-7 * biggest;
  if (d1 * d2 < 0.0 && std::fabs(d1) > noise && std::fabs(d2) > noise) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "flux sequence is not monotone in its tail (last values "
        << out.sequence[n - 3].flux << ", " << out.sequence[n - 2].flux << ", "
        << out.sequence[n - 1].flux << ")";
    throw ExtrapolationUnreliable(msg.str());
  }

  // Least squares for flux = m + c x with x = rho^-p.
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& fp : out.sequence) {
    const double x = std::pow(fp.rho, -p);
    sx += x;
    sy += fp.flux;
    sxx += x * x;
    sxy += x * fp.flux;
  }
  const double nn = static_cast<double>(n);
  const double c = (nn * sxy - sx * sy) / (nn * sxx - sx * sx);
  out.mass = (sy - c * sx) / nn;
  double ss = 0.0;
  for (const auto& fp : out.sequence) {
    const double r = fp.flux - (out.mass + c * std::pow(fp.rho, -p));
    ss += r * r;
  }
  const double xa = std::pow(out.sequence[n - 2].rho, p);
  const double xb = std::pow(out.sequence[n - 1].rho, p);
  const double two_point =
      (out.sequence[n - 1].flux * xb - out.sequence[n - 2].flux * xa) / (xb - xa);
  out.error_estimate = std::max(std::sqrt(ss / nn), std::fabs(out.mass - two_point));
  return out;
}

double mass_scalar_integral(const RadialProfile& profile) {
  const double c = mass_normalisation() * 2.0 * kPi * kPi;
  auto integrand = [&profile, c](double r) {
    const double s = r * r;
    const Jet4 u = profile.slope_jet(s);
    const double R = kRiemannianPerTrace * radial_curvature(profile, u, s).trace();
    return c * R * det_ratio(u, s) * r * r * r;
  };
  const double r_end = curvature_cutoff(profile);
  const std::vector<double> breaks = breaks_below(r_end);
  const double tail = power_law_tail(integrand, r_end, "scalar curvature");
  QuadratureSpec fine = default_quadrature_spec();
  fine.abs_tol = std::min(fine.abs_tol, 1e-13);
  return two_pass(fine, tail, [&](const QuadratureSpec& spec) {
    double total = 0.0, lo = 0.0;
    for (double hi : breaks) {
      total += integrate(integrand, lo, hi, spec).value;
      lo = hi;
    }
    return total;
  });
}

Theorem11Spec default_theorem11_spec() {
  Theorem11Spec spec;
  spec.outer = default_quadrature_spec();
  spec.outer.abs_tol = std::min(spec.outer.abs_tol, 1e-13);
  spec.outer.rel_tol = std::max(spec.outer.rel_tol, 1e-9);
  spec.inner = default_quadrature_spec();
  spec.inner.abs_tol = std::min(spec.inner.abs_tol, 1e-15);
  return spec;
}

double theorem11_rhs(const RadialProfile& profile, const Theorem11Spec& spec) {
  return reduced_volume_integral(
      profile, spec, [](const ConnectionSample& conn, const RadialCurvature& curv) {
        const HessianNorms h = coordinate_hessian_norms(conn);
        return 0.5 * h.h1 + 0.5 * h.h2 + h.grad1 * kRiemannianPerTrace * curv.trace();
      },
      "mass inequality integrand");
}

double hessian_integral(const RadialProfile& profile, const Theorem11Spec& spec) {
  return reduced_volume_integral(profile, spec,
                                 [](const ConnectionSample& conn, const RadialCurvature&) {
                                   const HessianNorms h = coordinate_hessian_norms(conn);
                                   return 0.5 * h.h1 + 0.5 * h.h2;
                                 },
                                 "coordinate Hessian");
}

nlohmann::json MassReport::to_json() const {
  nlohmann::json seq = nlohmann::json::array();
  for (const auto& fp : adm_flux_sequence) seq.push_back({{"rho", fp.rho}, {"flux", fp.flux}});
  return nlohmann::json{{"schema", "1"},
                        {"family", family},
                        {"lambda", lambda},
                        {"adm_flux", adm_flux},
                        {"adm_flux_error", adm_flux_error},
                        {"adm_flux_sequence", seq},
                        {"mass_scalar_integral", mass_scalar_integral},
                        {"rhs_theorem11", rhs_theorem11},
                        {"slack", slack},
                        {"rigidity_flag", rigidity_flag}};
}

MassReport mass_inequality_report(const RadialProfile& profile, const Theorem11Spec& spec) {
  MassReport rep;
  rep.family = profile.label();
  rep.lambda = profile.param("lambda");
  const AdmMass adm = adm_mass(profile);
  rep.adm_flux = adm.mass;
  rep.adm_flux_error = adm.error_estimate;
  rep.adm_flux_sequence = adm.sequence;
  rep.mass_scalar_integral = mass_scalar_integral(profile);
  rep.rhs_theorem11 = theorem11_rhs(profile, spec);
  rep.slack = rep.mass_scalar_integral - rep.rhs_theorem11;
  if (std::fabs(rep.mass_scalar_integral) <= kRigidityTolerance &&
      std::fabs(rep.adm_flux) <= kRigidityTolerance) {
    rep.rigidity_flag = std::fabs(hessian_integral(profile, spec)) <= kRigidityTolerance;
  }
  return rep;
}

}  // namespace aek
