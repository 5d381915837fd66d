#pragma once

// Truncated Taylor arithmetic in one real variable, carried to fourth order.
//
// A Jet4 stores the value and the first four derivatives (not the Taylor
// coefficients) of a scalar function at a point.  Every operation propagates
// these derivatives exactly, so curvature quantities that need four
// derivatives of a potential are obtained without finite differencing.

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "aekahler/errors.hpp"

namespace aek {

class Jet4 {
 public:
  static constexpr int kOrder = 4;

  constexpr Jet4() = default;
  constexpr explicit Jet4(double c0, double c1 = 0.0, double c2 = 0.0,
                          double c3 = 0.0, double c4 = 0.0)
      : c_{c0, c1, c2, c3, c4} {}

  static constexpr Jet4 constant(double c) { return Jet4(c); }
  static constexpr Jet4 variable(double x) { return Jet4(x, 1.0); }

  constexpr double operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
  constexpr double& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
  constexpr double value() const { return c_[0]; }
  constexpr const std::array<double, 5>& coefficients() const { return c_; }

  /// Jet of the derivative.  The top coefficient is unknown and set to NaN so
  /// that any result depending on it is visibly poisoned.
  Jet4 derivative() const {
    return Jet4(c_[1], c_[2], c_[3], c_[4], std::numeric_limits<double>::quiet_NaN());
  }

  Jet4& operator+=(const Jet4& o) {
    for (std::size_t k = 0; k < 5; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Jet4& operator-=(const Jet4& o) {
    for (std::size_t k = 0; k < 5; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Jet4& operator*=(double a) {
    for (auto& c : c_) c *= a;
    return *this;
  }

 private:
  std::array<double, 5> c_{};
};

inline Jet4 operator+(Jet4 a, const Jet4& b) { return a += b; }
inline Jet4 operator-(Jet4 a, const Jet4& b) { return a -= b; }
inline Jet4 operator-(const Jet4& a) {
  return Jet4(-a[0], -a[1], -a[2], -a[3], -a[4]);
}
inline Jet4 operator*(Jet4 a, double s) { return a *= s; }
inline Jet4 operator*(double s, Jet4 a) { return a *= s; }
inline Jet4 operator+(Jet4 a, double s) {
  a[0] += s;
  return a;
}
inline Jet4 operator+(double s, Jet4 a) { return a + s; }
inline Jet4 operator-(Jet4 a, double s) {
  a[0] -= s;
  return a;
}
inline Jet4 operator-(double s, const Jet4& a) { return -a + s; }

// Leibniz rule.
inline Jet4 operator*(const Jet4& a, const Jet4& b) {
  return Jet4(a[0] * b[0],
              a[1] * b[0] + a[0] * b[1],
              a[2] * b[0] + 2.0 * a[1] * b[1] + a[0] * b[2],
              a[3] * b[0] + 3.0 * a[2] * b[1] + 3.0 * a[1] * b[2] + a[0] * b[3],
              a[4] * b[0] + 4.0 * a[3] * b[1] + 6.0 * a[2] * b[2] +
                  4.0 * a[1] * b[3] + a[0] * b[4]);
}

/// Faa di Bruno: jet of F(g) given F, F', ..., F'''' evaluated at g.value().
inline Jet4 compose(const std::array<double, 5>& outer, const Jet4& g) {
  const double g1 = g[1], g2 = g[2], g3 = g[3], g4 = g[4];
  return Jet4(outer[0],
              outer[1] * g1,
              outer[2] * g1 * g1 + outer[1] * g2,
              outer[3] * g1 * g1 * g1 + 3.0 * outer[2] * g1 * g2 + outer[1] * g3,
              outer[4] * g1 * g1 * g1 * g1 + 6.0 * outer[3] * g1 * g1 * g2 +
                  outer[2] * (3.0 * g2 * g2 + 4.0 * g1 * g3) + outer[1] * g4);
}

inline Jet4 reciprocal(const Jet4& a) {
  if (a[0] == 0.0) throw EvaluationError("division by a jet with zero value");
  const double r = 1.0 / a[0];
  const double r2 = r * r;
  return compose({r, -r2, 2.0 * r2 * r, -6.0 * r2 * r2, 24.0 * r2 * r2 * r}, a);
}

inline Jet4 operator/(const Jet4& a, const Jet4& b) { return a * reciprocal(b); }
inline Jet4 operator/(const Jet4& a, double s) { return a * (1.0 / s); }
inline Jet4 operator/(double s, const Jet4& b) { return s * reciprocal(b); }

inline Jet4 exp(const Jet4& a) {
  const double e = std::exp(a[0]);
  return compose({e, e, e, e, e}, a);
}

inline Jet4 log(const Jet4& a) {
  if (!(a[0] > 0.0)) throw EvaluationError("log of non-positive value " + std::to_string(a[0]));
  const double r = 1.0 / a[0];
  const double r2 = r * r;
  return compose({std::log(a[0]), r, -r2, 2.0 * r2 * r, -6.0 * r2 * r2}, a);
}

/// a^p for a real exponent p; requires a > 0 unless p is a non-negative integer.
inline Jet4 pow(const Jet4& a, double p) {
  const double x = a[0];
  const bool integral = std::floor(p) == p && p >= 0.0;
  if (!integral && !(x > 0.0)) {
    throw EvaluationError("pow of non-positive base " + std::to_string(x));
  }
  std::array<double, 5> d{};
  double coeff = 1.0;
  for (int k = 0; k <= 4; ++k) {
    const double e = p - k;
    d[static_cast<std::size_t>(k)] = (coeff == 0.0) ? 0.0 : coeff * std::pow(x, e);
    coeff *= e;
  }
  return compose(d, a);
}

inline Jet4 sqrt(const Jet4& a) {
  if (!(a[0] > 0.0)) throw EvaluationError("sqrt of non-positive value " + std::to_string(a[0]));
  return pow(a, 0.5);
}

inline Jet4 pow(const Jet4& a, const Jet4& b) {
  if (b[1] == 0.0 && b[2] == 0.0 && b[3] == 0.0 && b[4] == 0.0) return pow(a, b[0]);
  return exp(b * log(a));
}

}  // namespace aek
