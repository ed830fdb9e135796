#pragma once

#include <array>
#include <cmath>

#include "actnet/core/errors.hpp"

namespace actnet {

inline constexpr int kMaxJetOrder = 4;

// Binomial coefficients up to the maximum jet order.
inline constexpr double kBinom[kMaxJetOrder + 1][kMaxJetOrder + 1] = {
    {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};

// Truncated derivative bundle of a scalar quantity along one input
// coordinate t: c[k] = d^k u / dt^k for k = 0..order. Arithmetic follows
// the exact Leibniz/composition rules truncated at the jet's order, so all
// propagated coefficients are exact derivatives of the composite function.
class Jet {
 public:
  Jet() = default;

  static Jet constant(double v, int order) {
    Jet j(order);
    j.c_[0] = v;
    return j;
  }

  // Seed for the active coordinate: value v, first derivative 1.
  static Jet variable(double v, int order) {
    Jet j(order);
    j.c_[0] = v;
    if (order >= 1) j.c_[1] = 1.0;
    return j;
  }

  static Jet from_coeffs(const double* c, int order) {
    Jet j(order);
    for (int k = 0; k <= order; ++k) j.c_[k] = c[k];
    return j;
  }

  int order() const { return order_; }
  double value() const { return c_[0]; }
  double operator[](int k) const { return c_[k]; }
  double& operator[](int k) { return c_[k]; }

  Jet operator-() const {
    Jet r(order_);
    for (int k = 0; k <= order_; ++k) r.c_[k] = -c_[k];
    return r;
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    check_orders(a, b);
    Jet r(a.order_);
    for (int k = 0; k <= a.order_; ++k) r.c_[k] = a.c_[k] + b.c_[k];
    return r;
  }
  friend Jet operator-(const Jet& a, const Jet& b) {
    check_orders(a, b);
    Jet r(a.order_);
    for (int k = 0; k <= a.order_; ++k) r.c_[k] = a.c_[k] - b.c_[k];
    return r;
  }

  // Leibniz rule: (ab)^(k) = sum_j C(k,j) a^(j) b^(k-j).
  friend Jet operator*(const Jet& a, const Jet& b) {
    check_orders(a, b);
    Jet r(a.order_);
    for (int k = 0; k <= a.order_; ++k) {
      double s = 0.0;
      for (int j = 0; j <= k; ++j) s += kBinom[k][j] * a.c_[j] * b.c_[k - j];
      r.c_[k] = s;
    }
    return r;
  }

  friend Jet operator/(const Jet& a, const Jet& b) {
    check_orders(a, b);
    if (std::abs(b.c_[0]) < 1e-14)
      throw SingularityError("jet division by (near-)zero value part");
    Jet r(a.order_);
    for (int k = 0; k <= a.order_; ++k) {
      double s = a.c_[k];
      for (int j = 0; j < k; ++j) s -= kBinom[k][j] * r.c_[j] * b.c_[k - j];
      r.c_[k] = s / b.c_[0];
    }
    return r;
  }

  friend Jet operator+(const Jet& a, double b) {
    Jet r = a;
    r.c_[0] += b;
    return r;
  }
  friend Jet operator+(double a, const Jet& b) { return b + a; }
  friend Jet operator-(const Jet& a, double b) { return a + (-b); }
  friend Jet operator-(double a, const Jet& b) { return (-b) + a; }
  friend Jet operator*(const Jet& a, double b) {
    Jet r(a.order_);
    for (int k = 0; k <= a.order_; ++k) r.c_[k] = a.c_[k] * b;
    return r;
  }
  friend Jet operator*(double a, const Jet& b) { return b * a; }
  friend Jet operator/(const Jet& a, double b) { return a * (1.0 / b); }
  friend Jet operator/(double a, const Jet& b) { return Jet::constant(a, b.order_) / b; }

 private:
  explicit Jet(int order) : order_(clamp_order(order)) { c_.fill(0.0); }

  static int clamp_order(int order) {
    if (order < 0 || order > kMaxJetOrder)
      throw ArgumentError("jet order must be in [0, " + std::to_string(kMaxJetOrder) + "]");
    return order;
  }

  static void check_orders(const Jet& a, const Jet& b) {
    if (a.order_ != b.order_) throw DimensionError("jet order mismatch");
  }

  int order_ = 0;
  std::array<double, kMaxJetOrder + 1> c_{};

  friend void sin_cos(const Jet&, Jet&, Jet&);
  friend Jet exp(const Jet&);
  friend Jet pow(const Jet&, double);
};

// Joint sine/cosine propagation:
//   s^(k) = sum_{j<k} C(k-1,j) c^(j) u^(k-j),  c^(k) = -sum_{j<k} C(k-1,j) s^(j) u^(k-j).
inline void sin_cos(const Jet& u, Jet& s, Jet& c) {
  s = Jet(u.order_);
  c = Jet(u.order_);
  s.c_[0] = std::sin(u.c_[0]);
  c.c_[0] = std::cos(u.c_[0]);
  for (int k = 1; k <= u.order_; ++k) {
    double ss = 0.0, cs = 0.0;
    for (int j = 0; j < k; ++j) {
      const double w = kBinom[k - 1][j] * u.c_[k - j];
      ss += w * c.c_[j];
      cs -= w * s.c_[j];
    }
    s.c_[k] = ss;
    c.c_[k] = cs;
  }
}

inline Jet sin(const Jet& u) {
  Jet s, c;
  sin_cos(u, s, c);
  return s;
}

inline Jet cos(const Jet& u) {
  Jet s, c;
  sin_cos(u, s, c);
  return c;
}

inline Jet exp(const Jet& u) {
  Jet r(u.order_);
  r.c_[0] = std::exp(u.c_[0]);
  for (int k = 1; k <= u.order_; ++k) {
    double s = 0.0;
    for (int j = 0; j < k; ++j) s += kBinom[k - 1][j] * r.c_[j] * u.c_[k - j];
    r.c_[k] = s;
  }
  return r;
}

// Integer power by repeated multiplication.
inline Jet pow(const Jet& u, int n) {
  if (n < 0) return Jet::constant(1.0, u.order()) / pow(u, -n);
  Jet r = Jet::constant(1.0, u.order());
  Jet base = u;
  int e = n;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

// Real power for u with positive value part, from u w' = r w u'.
inline Jet pow(const Jet& u, double r) {
  if (u.c_[0] <= 0.0) throw SingularityError("jet pow: value part must be positive");
  Jet w(u.order_);
  w.c_[0] = std::pow(u.c_[0], r);
  for (int k = 1; k <= u.order_; ++k) {
    double s = 0.0;
    for (int j = 0; j < k; ++j) s += r * kBinom[k - 1][j] * w.c_[j] * u.c_[k - j];
    for (int j = 1; j < k; ++j) s -= kBinom[k - 1][j] * u.c_[j] * w.c_[k - j];
    w.c_[k] = s / u.c_[0];
  }
  return w;
}

inline Jet sqrt(const Jet& u) { return pow(u, 0.5); }

// Free-function shims so templated code can treat double and Jet uniformly.
inline double value_of(double x) { return x; }
inline double value_of(const Jet& j) { return j.value(); }

}  // namespace actnet
