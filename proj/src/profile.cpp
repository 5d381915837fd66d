#include "aekahler/profile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "aekahler/errors.hpp"
#include "aekahler/monge_ampere.hpp"

namespace aek {

double RadialProfile::param(const std::string& name, double fallback) const {
  auto it = params_.find(name);
  return it == params_.end() ? fallback : it->second;
}

ExpressionProfile::ExpressionProfile(std::string label, Expression potential, Params params)
    : RadialProfile(std::move(label), std::move(params)),
      potential_(std::move(potential)),
      slope_(potential_.derivative()) {}

Jet4 ExpressionProfile::slope_jet(double s) const {
  return slope_.eval(Jet4::variable(s), params());
}

double ExpressionProfile::potential(double s) const { return potential_.eval(s, params()); }

nlohmann::json ExpressionProfile::to_json() const {
  return nlohmann::json{{"label", label()}, {"params", params()}, {"potential", potential_.to_json()}};
}

ProfilePtr make_expression_profile(std::string label, Expression potential, Params params) {
  return std::make_shared<ExpressionProfile>(std::move(label), std::move(potential),
                                             std::move(params));
}

ProfilePtr euclidean_profile() {
  return make_expression_profile("euclidean", Expression::s());
}

namespace {

Params read_params(const nlohmann::json& j) {
  Params params;
  if (!j.contains("params")) return params;
  if (!j["params"].is_object()) throw ParseError("/params: expected an object");
  for (const auto& [key, value] : j["params"].items()) {
    if (!value.is_number()) throw ParseError("/params/" + key + ": expected a number");
    params[key] = value.get<double>();
  }
  return params;
}

}  // namespace

ProfilePtr profile_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("/: profile must be a JSON object");
  const std::string label = j.value("label", std::string("custom"));
  Params params = read_params(j);
  if (j.contains("potential")) {
    return make_expression_profile(label, Expression::from_json(j["potential"], "/potential"),
                                   std::move(params));
  }
  if (j.contains("density")) {
    return solve_potential(VolumeDensity::from_json(j), label);
  }
  throw ParseError("/: profile needs either 'potential' or 'density'");
}

ProfilePtr load_profile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open profile file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  return profile_from_json(j);
}

MetricSample metric_matrix(const RadialProfile& profile, const Point4& p) {
  const std::complex<double> z[2] = {{p[0], p[1]}, {p[2], p[3]}};
  const double s = std::norm(z[0]) + std::norm(z[1]);
  const Jet4 u = profile.slope_jet(s);
  MetricSample out;
  out.point = p;
  out.eigen_base = u[0];
  out.eigen_fiber = u[0] + s * u[1];
  out.det_ratio = out.eigen_base * out.eigen_fiber;
  if (!(out.eigen_base > 0.0) || !(out.eigen_fiber > 0.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "metric not positive definite at s = " << s << " (eigenvalues " << out.eigen_base
        << ", " << out.eigen_fiber << ")";
    throw NotKaehlerHere(msg.str(), s);
  }
  for (int i = 0; i < 2; ++i) {
    for (int k = 0; k < 2; ++k) {
      out.hermitian(i, k) = (i == k ? u[0] : 0.0) + u[1] * std::conj(z[i]) * z[k];
    }
  }
  return out;
}

PositivityReport check_positivity(const RadialProfile& profile, const std::vector<double>& s_grid) {
  if (s_grid.empty()) throw UsageError("check_positivity: empty grid");
  for (double s : s_grid) {
    if (!(s > 0.0)) throw UsageError("check_positivity: grid points must be positive");
    Jet4 u;
    try {
      u = profile.slope_jet(s);
    } catch (const EvaluationError&) {
      return {false, s, "evaluation"};
    }
    if (!(u[0] > 0.0)) return {false, s, "base"};
    if (!(u[0] + s * u[1] > 0.0)) return {false, s, "fiber"};
  }
  return {};
}

std::vector<double> log_grid(double lo, double hi, int per_decade) {
  if (!(lo > 0.0) || !(hi > lo) || per_decade < 1) throw UsageError("log_grid: need 0 < lo < hi");
  const int n = std::max(2, static_cast<int>(std::ceil(std::log10(hi / lo) * per_decade)) + 1);
  return log_points(lo, hi, n);
}

std::vector<double> log_points(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi >= lo) || n < 1) throw UsageError("log_points: need 0 < lo <= hi");
  std::vector<double> out(static_cast<std::size_t>(n));
  if (n == 1) {
    out[0] = lo;
    return out;
  }
  // Base 10 so that decades land on exact powers of ten.
  const double a = std::log10(lo);
  const double step = (std::log10(hi) - a) / (n - 1);
  for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = std::pow(10.0, a + step * i);
  out.front() = lo;
  out.back() = hi;
  return out;
}

MetricJet metric_jet_along(const Jet4& u, const Point4& x, const Point4& v) {
  double s = 0.0, xv = 0.0, vv = 0.0;
  for (int a = 0; a < 4; ++a) {
    s += x[a] * x[a];
    xv += x[a] * v[a];
    vv += v[a] * v[a];
  }
  const Jet4 sj(s, 2.0 * xv, 2.0 * vv);
  const Jet4 U = compose(u.coefficients(), sj);
  const Jet4 Up = compose(u.derivative().coefficients(), sj);
  std::array<Jet4, 4> X, JX;
  for (int a = 0; a < 4; ++a) X[a] = Jet4(x[a], v[a]);
  JX = {-X[1], X[0], -X[3], X[2]};
  MetricJet g;
  for (int a = 0; a < 4; ++a) {
    for (int b = a; b < 4; ++b) {
      g[a][b] = Up * (X[a] * X[b] + JX[a] * JX[b]);
      if (a == b) g[a][b] += U;
      g[b][a] = g[a][b];
    }
  }
  return g;
}

MetricJet metric_jet_along(const RadialProfile& profile, const Point4& x, const Point4& v) {
  const double s = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
  return metric_jet_along(profile.slope_jet(s), x, v);
}

RealMetricSample real_metric_tensor(const Jet4& u, const Point4& x) {
  RealMetricSample out;
  out.point = x;
  for (int c = 0; c < 4; ++c) {
    Point4 e{};
    e[c] = 1.0;
    const MetricJet j = metric_jet_along(u, x, e);
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        if (c == 0) out.g(a, b) = j[a][b][0];
        out.dg[c](a, b) = j[a][b][1];
      }
    }
  }
  return out;
}

RealMetricSample real_metric_tensor(const RadialProfile& profile, const Point4& x) {
  metric_matrix(profile, x);  // positivity
  const double s = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
  return real_metric_tensor(profile.slope_jet(s), x);
}

namespace {

// Unit directions on S^3 at which the sup over the sphere is sampled.
const std::array<Point4, 6> kSphereDirections = {{
    {1.0, 0.0, 0.0, 0.0},
    {0.0, 0.0, 1.0, 0.0},
    {M_SQRT1_2, M_SQRT1_2, 0.0, 0.0},
    {M_SQRT1_2, 0.0, M_SQRT1_2, 0.0},
    {0.5, 0.5, 0.5, 0.5},
    {0.6, 0.0, 0.0, 0.8},
}};

struct LineFit {
  double slope;
  double intercept;
  double rms;
};

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (intercept + slope * x[i]);
    ss += r * r;
  }
  return {slope, intercept, std::sqrt(ss / n)};
}

}  // namespace

DecayEstimate estimate_decay(const RadialProfile& profile, double r_lo, double r_hi, int samples) {
  if (!(r_lo > 0.0) || !(r_hi > r_lo) || samples < 3) {
    throw UsageError("estimate_decay: need 0 < r_lo < r_hi and at least 3 samples");
  }
  const std::vector<double> radii = log_points(r_lo, r_hi, samples);
  std::array<std::vector<double>, 3> logdev;
  std::vector<double> logr;
  for (double r : radii) {
    const Jet4 u = profile.slope_jet(r * r);
    std::array<double, 3> dev{};
    for (const Point4& d : kSphereDirections) {
      const Point4 x = {r * d[0], r * d[1], r * d[2], r * d[3]};
      for (int c = 0; c < 4; ++c) {
        Point4 e{};
        e[c] = 1.0;
        const MetricJet j = metric_jet_along(u, x, e);
        for (int a = 0; a < 4; ++a) {
          for (int b = 0; b < 4; ++b) {
            dev[0] = std::max(dev[0], std::fabs(j[a][b][0] - (a == b ? 1.0 : 0.0)));
            dev[1] = std::max(dev[1], std::fabs(j[a][b][1]));
            dev[2] = std::max(dev[2], std::fabs(j[a][b][2]));
          }
        }
      }
    }
    if (!(dev[0] > 0.0)) {
      std::ostringstream msg;
      msg << "metric is exactly Euclidean at r = " << r << "; no decay rate to fit";
      throw ExactlyFlat(msg.str());
    }
    logr.push_back(std::log(r));
    for (int k = 0; k < 3; ++k) logdev[k].push_back(std::log(std::max(dev[k], 1e-300)));
  }
  DecayEstimate out;
  for (int k = 0; k < 3; ++k) {
    const LineFit f = fit_line(logr, logdev[k]);
    out.slopes[k] = -f.slope;
    if (k == 0) {
      out.tau = -f.slope;
      out.residual = f.rms;
    }
    out.b = std::max(out.b, std::exp(f.intercept));
  }
  return out;
}

}  // namespace aek
