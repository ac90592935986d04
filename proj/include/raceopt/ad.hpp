#pragma once

// Forward-mode automatic differentiation scalars used by the stage-function
// machinery. Dual<D> carries a value and a D-dimensional gradient; Dual2<D>
// additionally carries the dense Hessian. Both are drop-in scalar types for
// the templated model functions.

#include <Eigen/Core>
#include <cmath>

namespace raceopt::ad {

template <int D>
struct Dual {
  using Grad = Eigen::Matrix<double, D, 1>;

  double val = 0.0;
  Grad grad = Grad::Zero();

  Dual() = default;
  Dual(double v) : val(v) {}  // NOLINT: implicit constant promotion
  Dual(double v, const Grad& g) : val(v), grad(g) {}

  static Dual seed(double v, int i) {
    Dual d(v);
    d.grad[i] = 1.0;
    return d;
  }

  Dual& operator+=(const Dual& o) {
    val += o.val;
    grad += o.grad;
    return *this;
  }
  Dual& operator-=(const Dual& o) {
    val -= o.val;
    grad -= o.grad;
    return *this;
  }
  Dual& operator*=(const Dual& o) { return *this = *this * o; }
  Dual& operator/=(const Dual& o) { return *this = *this / o; }

  friend Dual operator+(const Dual& a, const Dual& b) { return {a.val + b.val, a.grad + b.grad}; }
  friend Dual operator-(const Dual& a, const Dual& b) { return {a.val - b.val, a.grad - b.grad}; }
  friend Dual operator-(const Dual& a) { return {-a.val, -a.grad}; }
  friend Dual operator*(const Dual& a, const Dual& b) {
    return {a.val * b.val, a.val * b.grad + b.val * a.grad};
  }
  friend Dual operator/(const Dual& a, const Dual& b) {
    const double inv = 1.0 / b.val;
    const double q = a.val * inv;
    return {q, (a.grad - q * b.grad) * inv};
  }

  friend bool operator<(const Dual& a, const Dual& b) { return a.val < b.val; }
  friend bool operator>(const Dual& a, const Dual& b) { return a.val > b.val; }
  friend bool operator<=(const Dual& a, const Dual& b) { return a.val <= b.val; }
  friend bool operator>=(const Dual& a, const Dual& b) { return a.val >= b.val; }
};

// Unary chain rule helper: f(x) with derivative fp.
template <int D>
inline Dual<D> unary(const Dual<D>& x, double f, double fp) {
  return {f, fp * x.grad};
}

template <int D> inline Dual<D> sin(const Dual<D>& x) { return unary(x, std::sin(x.val), std::cos(x.val)); }
template <int D> inline Dual<D> cos(const Dual<D>& x) { return unary(x, std::cos(x.val), -std::sin(x.val)); }
template <int D> inline Dual<D> tan(const Dual<D>& x) {
  const double t = std::tan(x.val);
  return unary(x, t, 1.0 + t * t);
}
template <int D> inline Dual<D> atan(const Dual<D>& x) {
  return unary(x, std::atan(x.val), 1.0 / (1.0 + x.val * x.val));
}
template <int D> inline Dual<D> sqrt(const Dual<D>& x) {
  const double r = std::sqrt(x.val);
  return unary(x, r, 0.5 / r);
}
template <int D> inline Dual<D> exp(const Dual<D>& x) {
  const double e = std::exp(x.val);
  return unary(x, e, e);
}
template <int D> inline Dual<D> log(const Dual<D>& x) { return unary(x, std::log(x.val), 1.0 / x.val); }
template <int D> inline Dual<D> sq(const Dual<D>& x) { return x * x; }

template <int D>
struct Dual2 {
  using Grad = Eigen::Matrix<double, D, 1>;
  using Hess = Eigen::Matrix<double, D, D>;

  double val = 0.0;
  Grad grad = Grad::Zero();
  Hess hess = Hess::Zero();

  Dual2() = default;
  Dual2(double v) : val(v) {}  // NOLINT: implicit constant promotion
  Dual2(double v, const Grad& g, const Hess& h) : val(v), grad(g), hess(h) {}

  static Dual2 seed(double v, int i) {
    Dual2 d(v);
    d.grad[i] = 1.0;
    return d;
  }

  Dual2& operator+=(const Dual2& o) {
    val += o.val;
    grad += o.grad;
    hess += o.hess;
    return *this;
  }
  Dual2& operator-=(const Dual2& o) {
    val -= o.val;
    grad -= o.grad;
    hess -= o.hess;
    return *this;
  }
  Dual2& operator*=(const Dual2& o) { return *this = *this * o; }
  Dual2& operator/=(const Dual2& o) { return *this = *this / o; }

  friend Dual2 operator+(const Dual2& a, const Dual2& b) {
    return {a.val + b.val, a.grad + b.grad, a.hess + b.hess};
  }
  friend Dual2 operator-(const Dual2& a, const Dual2& b) {
    return {a.val - b.val, a.grad - b.grad, a.hess - b.hess};
  }
  friend Dual2 operator-(const Dual2& a) { return {-a.val, -a.grad, -a.hess}; }
  friend Dual2 operator*(const Dual2& a, const Dual2& b) {
    Dual2 r;
    r.val = a.val * b.val;
    r.grad = a.val * b.grad + b.val * a.grad;
    r.hess = a.val * b.hess + b.val * a.hess + a.grad * b.grad.transpose() +
             b.grad * a.grad.transpose();
    return r;
  }
  friend Dual2 operator/(const Dual2& a, const Dual2& b) { return a * inv(b); }

  friend bool operator<(const Dual2& a, const Dual2& b) { return a.val < b.val; }
  friend bool operator>(const Dual2& a, const Dual2& b) { return a.val > b.val; }
  friend bool operator<=(const Dual2& a, const Dual2& b) { return a.val <= b.val; }
  friend bool operator>=(const Dual2& a, const Dual2& b) { return a.val >= b.val; }
};

// Unary chain rule: f(x), f'(x), f''(x).
template <int D>
inline Dual2<D> unary(const Dual2<D>& x, double f, double fp, double fpp) {
  return {f, fp * x.grad, fp * x.hess + fpp * (x.grad * x.grad.transpose())};
}

template <int D> inline Dual2<D> inv(const Dual2<D>& x) {
  const double i = 1.0 / x.val;
  return unary(x, i, -i * i, 2.0 * i * i * i);
}
template <int D> inline Dual2<D> sin(const Dual2<D>& x) {
  const double s = std::sin(x.val), c = std::cos(x.val);
  return unary(x, s, c, -s);
}
template <int D> inline Dual2<D> cos(const Dual2<D>& x) {
  const double s = std::sin(x.val), c = std::cos(x.val);
  return unary(x, c, -s, -c);
}
template <int D> inline Dual2<D> tan(const Dual2<D>& x) {
  const double t = std::tan(x.val);
  const double d = 1.0 + t * t;
  return unary(x, t, d, 2.0 * t * d);
}
template <int D> inline Dual2<D> atan(const Dual2<D>& x) {
  const double d = 1.0 / (1.0 + x.val * x.val);
  return unary(x, std::atan(x.val), d, -2.0 * x.val * d * d);
}
template <int D> inline Dual2<D> sqrt(const Dual2<D>& x) {
  const double r = std::sqrt(x.val);
  return unary(x, r, 0.5 / r, -0.25 / (r * x.val));
}
template <int D> inline Dual2<D> exp(const Dual2<D>& x) {
  const double e = std::exp(x.val);
  return unary(x, e, e, e);
}
template <int D> inline Dual2<D> log(const Dual2<D>& x) {
  const double i = 1.0 / x.val;
  return unary(x, std::log(x.val), i, -i * i);
}
template <int D> inline Dual2<D> sq(const Dual2<D>& x) { return x * x; }

// Plain-double counterparts so templated model code works for T = double.
inline double sq(double x) { return x * x; }
using std::atan;
using std::cos;
using std::exp;
using std::log;
using std::sin;
using std::sqrt;
using std::tan;

template <typename T> inline double value_of(const T& x) { return x.val; }
inline double value_of(double x) { return x; }

}  // namespace raceopt::ad
