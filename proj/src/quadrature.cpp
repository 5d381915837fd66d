#include "aekahler/quadrature.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

namespace aek {
namespace {

// Gauss-Kronrod 10/21 abscissae and weights on [-1, 1] (QUADPACK qk21).
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525478336, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for the nodes kXgk[1], kXgk[3], ..., kXgk[9].
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr std::size_t kMaxPanels = 20000;

template <class V>
struct Panel {
  double a;
  double b;
  int depth;
  V value;
  V error;
};

double tolerance_ratio(double err, double total, const QuadratureSpec& spec) {
  return err / std::max(spec.abs_tol, spec.rel_tol * std::fabs(total));
}
double tolerance_ratio(const Jet4& err, const Jet4& total, const QuadratureSpec& spec) {
  double worst = 0.0;
  for (int k = 0; k <= Jet4::kOrder; ++k) {
    worst = std::max(worst, std::fabs(err[k]) /
                                std::max(spec.abs_tol, spec.rel_tol * std::fabs(total[k])));
  }
  return worst;
}

double abs_of(double v) { return std::fabs(v); }
Jet4 abs_of(const Jet4& j) {
  return Jet4(std::fabs(j[0]), std::fabs(j[1]), std::fabs(j[2]), std::fabs(j[3]),
              std::fabs(j[4]));
}

double largest(double e) { return e; }
double largest(const Jet4& e) {
  double m = 0.0;
  for (int k = 0; k <= Jet4::kOrder; ++k) m = std::max(m, e[k]);
  return m;
}

std::array<double, 21> panel_nodes(double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  std::array<double, 21> t{};
  t[0] = center;
  for (std::size_t j = 0; j < 10; ++j) {
    t[1 + 2 * j] = center - half * kXgk[j];
    t[2 + 2 * j] = center + half * kXgk[j];
  }
  return t;
}

// `batch` maps 21 panel nodes to integrand values; it is where serial and
// parallel execution differ.  Summation order is fixed, so both agree bitwise.
template <class V, class Batch>
Panel<V> gauss_kronrod(const Batch& batch, double a, double b, int depth) {
  const std::array<double, 21> t = panel_nodes(a, b);
  const std::array<V, 21> f = batch(t);
  const double half = 0.5 * (b - a);
  V kronrod = f[0] * kWgk[10];
  V gauss{};
  for (std::size_t j = 0; j < 10; ++j) {
    const V sum = f[1 + 2 * j] + f[2 + 2 * j];
    kronrod += sum * kWgk[j];
    if (j % 2 == 1) gauss += sum * kWg[j / 2];
  }
  kronrod *= half;
  gauss *= half;
  V diff = kronrod;
  diff -= gauss;
  return Panel<V>{a, b, depth, kronrod, abs_of(diff)};
}

// Global adaptive bisection of the panel with the largest error.  `to_x` maps
// panel coordinates back to the caller's variable for error reporting.
template <class V, class Batch, class Map>
std::pair<V, double> adaptive(const Batch& batch, double a, double b,
                              const QuadratureSpec& spec, int* evaluations, const Map& to_x) {
  std::vector<Panel<V>> panels;
  panels.push_back(gauss_kronrod<V>(batch, a, b, 0));
  *evaluations += 21;
  for (;;) {
    V total{};
    V total_err{};
    for (const auto& p : panels) {
      total += p.value;
      total_err += p.error;
    }
    if (tolerance_ratio(total_err, total, spec) <= 1.0) return {total, largest(total_err)};

    std::size_t worst = 0;
    double worst_score = -1.0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      const double score = tolerance_ratio(panels[i].error, total, spec);
      if (score > worst_score) {
        worst_score = score;
        worst = i;
      }
    }
    const Panel<V> p = panels[worst];
    const double mid = 0.5 * (p.a + p.b);
    if (p.depth >= spec.max_depth || panels.size() >= kMaxPanels ||
        !(mid > p.a && mid < p.b)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "quadrature did not converge: error " << largest(total_err)
          << " exceeds tolerance; worst subinterval [" << to_x(p.a) << ", " << to_x(p.b)
          << "]";
      throw ToleranceFailure(msg.str(), to_x(p.a), to_x(p.b));
    }
    panels[worst] = gauss_kronrod<V>(batch, p.a, mid, p.depth + 1);
    panels.push_back(gauss_kronrod<V>(batch, mid, p.b, p.depth + 1));
    *evaluations += 42;
  }
}

// Change of variables for [a, inf).  Returns (x, dx/dt); x = inf means the
// node lies beyond double range and contributes nothing.
struct Mapping {
  double a;
  double b;
  Substitution sub;
  bool improper;

  std::pair<double, double> operator()(double t) const {
    if (!improper) return {t, 1.0};
    const double w = 1.0 - t;
    if (sub == Substitution::log_map) {
      const double y = t / w;
      return {a + std::expm1(y), std::exp(y) / (w * w)};
    }
    return {a + t / w, 1.0 / (w * w)};
  }
  double lo() const { return improper ? 0.0 : a; }
  double hi() const { return improper ? 1.0 : b; }
  double report(double t) const {
    if (improper && t >= 1.0) return INFINITY;
    return (*this)(t).first;
  }
};

Mapping make_mapping(double a, double b, const QuadratureSpec& spec, const char* who) {
  if (!(a < b)) throw UsageError(std::string(who) + " requires a < b");
  if (!std::isfinite(a)) throw UsageError(std::string(who) + ": lower limit must be finite");
  const bool improper = !std::isfinite(b);
  if (improper && spec.improper_substitution == Substitution::none) {
    throw UsageError(std::string(who) + ": infinite upper limit needs a substitution");
  }
  return Mapping{a, b, spec.improper_substitution, improper};
}

template <class F>
double mapped_value(const F& f, const Mapping& map, double t) {
  const auto [x, jac] = map(t);
  if (!std::isfinite(x) || !std::isfinite(jac)) return 0.0;
  if (!map.improper) return f(x);
  return f(x) * jac;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw UsageError("quadrature tolerances must be positive");
  }
  if (max_depth < 1) throw UsageError("quadrature max_depth must be at least 1");
}

QuadratureSpec default_quadrature_spec() {
  QuadratureSpec spec;
  if (const char* r = std::getenv("AEKAHLER_RTOL")) spec.rel_tol = std::strtod(r, nullptr);
  if (const char* a = std::getenv("AEKAHLER_ATOL")) spec.abs_tol = std::strtod(a, nullptr);
  spec.validate();
  return spec;
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec) {
  spec.validate();
  const Mapping map = make_mapping(a, b, spec, "integrate");
  auto batch = [&](const std::array<double, 21>& t) {
    std::array<double, 21> out{};
    for (std::size_t i = 0; i < 21; ++i) out[i] = mapped_value(f, map, t[i]);
    return out;
  };
  QuadratureResult res;
  auto [v, e] = adaptive<double>(batch, map.lo(), map.hi(), spec, &res.evaluations,
                                 [&map](double t) { return map.report(t); });
  res.value = v;
  res.error_estimate = e;
  return res;
}

JetQuadratureResult integrate_jet(const std::function<Jet4(double)>& f, double a, double b,
                                  const QuadratureSpec& spec) {
  spec.validate();
  if (!std::isfinite(b)) throw UsageError("integrate_jet requires a finite interval");
  make_mapping(a, b, spec, "integrate_jet");  // argument checks only
  auto batch = [&](const std::array<double, 21>& t) {
    std::array<Jet4, 21> out{};
    for (std::size_t i = 0; i < 21; ++i) out[i] = f(t[i]);
    return out;
  };
  int evals = 0;
  auto [v, e] = adaptive<Jet4>(batch, a, b, spec, &evals, [](double t) { return t; });
  return JetQuadratureResult{v, e};
}

QuadratureResult integrate_2d_rows(
    const std::function<std::function<double(double)>(double)>& rows, Interval x,
    Interval y, const QuadratureSpec& outer_spec, const QuadratureSpec& inner_spec,
    Execution exec) {
  outer_spec.validate();
  inner_spec.validate();
  const Mapping map = make_mapping(x.lo, x.hi, outer_spec, "integrate_2d");
  int inner_evals = 0;

  auto outer_value = [&](double xv, int* evals) {
    const QuadratureResult r = integrate(rows(xv), y.lo, y.hi, inner_spec);
    *evals = r.evaluations;
    return r.value;
  };
  auto batch = [&](const std::array<double, 21>& t) {
    std::array<double, 21> out{};
    std::array<int, 21> evals{};
    if (exec == Execution::serial) {
      for (std::size_t i = 0; i < 21; ++i) {
        out[i] = mapped_value([&](double xv) { return outer_value(xv, &evals[i]); }, map, t[i]);
      }
    } else {
      std::string failure;
      bool failed = false;
#pragma omp parallel for schedule(dynamic)
      for (int i = 0; i < 21; ++i) {
        const auto k = static_cast<std::size_t>(i);
        try {
          out[k] = mapped_value([&](double xv) { return outer_value(xv, &evals[k]); }, map, t[k]);
        } catch (const std::exception& e) {
#pragma omp critical(aek_quadrature_failure)
          {
            if (!failed) failure = e.what();
            failed = true;
          }
        }
      }
      if (failed) throw NumericalError(failure);
    }
    for (int e : evals) inner_evals += e;
    return out;
  };

  QuadratureResult res;
  auto [v, e] = adaptive<double>(batch, map.lo(), map.hi(), outer_spec, &res.evaluations,
                                 [&map](double t) { return map.report(t); });
  res.value = v;
  res.error_estimate = e;
  res.evaluations = inner_evals;
  return res;
}

QuadratureResult integrate_2d(const std::function<double(double, double)>& f, Interval x,
                              Interval y, const QuadratureSpec& outer_spec,
                              const QuadratureSpec& inner_spec, Execution exec) {
  return integrate_2d_rows(
      [&f](double xv) {
        return std::function<double(double)>([&f, xv](double yv) { return f(xv, yv); });
      },
      x, y, outer_spec, inner_spec, exec);
}

}  // namespace aek
