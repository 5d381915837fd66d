#pragma once

// Adaptive Gauss-Kronrod (10/21) quadrature for proper and improper integrals,
// plus a nested two-dimensional rule.  Integrands are never evaluated at the
// interval endpoints, so removable singularities there are tolerated.

#include <array>
#include <cmath>
#include <functional>
#include <limits>

#include "aekahler/jet.hpp"

namespace aek {

enum class Substitution {
  none,
  /// x = a + t / (1 - t), t in [0, 1).  Suited to power-law tails.
  rational_map,
  /// x = a + exp(t / (1 - t)) - 1, t in [0, 1).  Integrates in log x far out.
  log_map,
};

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 48;
  Substitution improper_substitution = Substitution::rational_map;

  void validate() const;
};

/// Returns the default spec, honouring AEKAHLER_RTOL / AEKAHLER_ATOL if set.
QuadratureSpec default_quadrature_spec();

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
};

enum class Execution { serial, parallel };

/// Integral of f over [a, b].  b may be +infinity when spec selects a
/// substitution.  Throws ToleranceFailure carrying the worst subinterval.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec = default_quadrature_spec());

struct Interval {
  double lo;
  double hi;
};

/// Nested 2D integral.  The outer axis is x; for every outer node the inner
/// integral over y is computed adaptively.  `rows(x)` returns the inner
/// integrand, which lets callers share work that only depends on x.
/// Parallel execution evaluates the inner integrals of one outer panel
/// concurrently; the result is identical to the serial one.
QuadratureResult integrate_2d_rows(
    const std::function<std::function<double(double)>(double)>& rows, Interval x,
    Interval y, const QuadratureSpec& outer_spec, const QuadratureSpec& inner_spec,
    Execution exec = Execution::serial);

QuadratureResult integrate_2d(const std::function<double(double, double)>& f, Interval x,
                              Interval y, const QuadratureSpec& outer_spec,
                              const QuadratureSpec& inner_spec,
                              Execution exec = Execution::serial);

/// Integral over [a, b] (finite) of a jet-valued integrand, componentwise.
/// Convergence is judged on every component against abs_tol + rel_tol * |I_k|.
struct JetQuadratureResult {
  Jet4 value;
  double error_estimate = 0.0;
};
JetQuadratureResult integrate_jet(const std::function<Jet4(double)>& f, double a, double b,
                                  const QuadratureSpec& spec = default_quadrature_spec());

}  // namespace aek
