#pragma once

#include <cmath>

namespace tubegeo {

// Forward-mode dual scalar. Nesting (Dual<Dual<double>>) yields exact second
// derivatives of anything written generically against this type; a third
// level is used when curvature of a pullback metric is requested.
template <class T>
struct Dual {
  T a{};  // value
  T b{};  // derivative

  Dual() = default;
  Dual(double v) : a(v), b() {}
  Dual(const T& value, const T& deriv) : a(value), b(deriv) {}
};

inline double value(double x) { return x; }
template <class T>
double value(const Dual<T>& x) {
  return value(x.a);
}

template <class T>
Dual<T> operator+(const Dual<T>& x, const Dual<T>& y) {
  return {x.a + y.a, x.b + y.b};
}
template <class T>
Dual<T> operator-(const Dual<T>& x, const Dual<T>& y) {
  return {x.a - y.a, x.b - y.b};
}
template <class T>
Dual<T> operator-(const Dual<T>& x) {
  return {-x.a, -x.b};
}
template <class T>
Dual<T> operator*(const Dual<T>& x, const Dual<T>& y) {
  return {x.a * y.a, x.a * y.b + x.b * y.a};
}
template <class T>
Dual<T> operator/(const Dual<T>& x, const Dual<T>& y) {
  T q = x.a / y.a;
  return {q, (x.b - q * y.b) / y.a};
}

template <class T> Dual<T> operator+(const Dual<T>& x, double c) { return x + Dual<T>(c); }
template <class T> Dual<T> operator+(double c, const Dual<T>& x) { return Dual<T>(c) + x; }
template <class T> Dual<T> operator-(const Dual<T>& x, double c) { return x - Dual<T>(c); }
template <class T> Dual<T> operator-(double c, const Dual<T>& x) { return Dual<T>(c) - x; }
template <class T> Dual<T> operator*(const Dual<T>& x, double c) { return x * Dual<T>(c); }
template <class T> Dual<T> operator*(double c, const Dual<T>& x) { return Dual<T>(c) * x; }
template <class T> Dual<T> operator/(const Dual<T>& x, double c) { return x / Dual<T>(c); }
template <class T> Dual<T> operator/(double c, const Dual<T>& x) { return Dual<T>(c) / x; }

template <class T>
Dual<T>& operator+=(Dual<T>& x, const Dual<T>& y) { x = x + y; return x; }
template <class T>
Dual<T>& operator-=(Dual<T>& x, const Dual<T>& y) { x = x - y; return x; }
template <class T>
Dual<T>& operator*=(Dual<T>& x, const Dual<T>& y) { x = x * y; return x; }
template <class T>
Dual<T>& operator/=(Dual<T>& x, const Dual<T>& y) { x = x / y; return x; }

using std::atan;
using std::cos;
using std::exp;
using std::log;
using std::sin;
using std::sqrt;

template <class T>
Dual<T> sqrt(const Dual<T>& x) {
  T s = sqrt(x.a);
  return {s, x.b / (s + s)};
}
template <class T>
Dual<T> sin(const Dual<T>& x) {
  return {sin(x.a), x.b * cos(x.a)};
}
template <class T>
Dual<T> cos(const Dual<T>& x) {
  return {cos(x.a), -x.b * sin(x.a)};
}
template <class T>
Dual<T> exp(const Dual<T>& x) {
  T e = exp(x.a);
  return {e, x.b * e};
}
template <class T>
Dual<T> log(const Dual<T>& x) {
  return {log(x.a), x.b / x.a};
}
template <class T>
Dual<T> atan(const Dual<T>& x) {
  return {atan(x.a), x.b / (T(1.0) + x.a * x.a)};
}

// Small non-negative integer powers; enough for the polynomial catalogs.
template <class S>
S powi(const S& x, int n) {
  S r(1.0);
  for (int i = 0; i < n; ++i) r = r * x;
  return r;
}

using D1 = Dual<double>;
using D2 = Dual<D1>;
using D3 = Dual<D2>;

}  // namespace tubegeo
