#pragma once

#include <functional>
#include <utility>

#include "tubegeo/dual.hpp"
#include "tubegeo/smallmat.hpp"

namespace tubegeo {

// Type-erased smooth maps, instantiated at every dual depth a consumer may
// request. Catalog code hands in a single generic functor; the erasure keeps
// the library interfaces non-template.

// x (chart point) -> symmetric metric matrix.
struct MetricFn {
  int dim = 0;
  std::function<void(const Vec<double>&, Mat<double>&)> m0;
  std::function<void(const Vec<D1>&, Mat<D1>&)> m1;
  std::function<void(const Vec<D2>&, Mat<D2>&)> m2;

  template <class F>
  static MetricFn make(int n, F f) {
    MetricFn e;
    e.dim = n;
    e.m0 = [f](const Vec<double>& x, Mat<double>& g) { f(x, g); };
    e.m1 = [f](const Vec<D1>& x, Mat<D1>& g) { f(x, g); };
    e.m2 = [f](const Vec<D2>& x, Mat<D2>& g) { f(x, g); };
    return e;
  }
  explicit operator bool() const { return static_cast<bool>(m0); }
};

// (chart, chart point) -> scalar. Used for isoparametric functions.
struct ScalarFn {
  std::function<double(int, const Vec<double>&)> s0;
  std::function<D1(int, const Vec<D1>&)> s1;
  std::function<D2(int, const Vec<D2>&)> s2;

  template <class F>
  static ScalarFn make(F f) {
    ScalarFn e;
    e.s0 = [f](int c, const Vec<double>& x) { return f(c, x); };
    e.s1 = [f](int c, const Vec<D1>& x) { return f(c, x); };
    e.s2 = [f](int c, const Vec<D2>& x) { return f(c, x); };
    return e;
  }
  explicit operator bool() const { return static_cast<bool>(s0); }
};

// (chart, parameter u) -> chart point. Third-order slot feeds the pullback
// metric, whose curvature needs three derivatives of the parametrization.
struct ParamFn {
  int m = 0, n = 0;
  std::function<void(int, const Vec<double>&, Vec<double>&)> p0;
  std::function<void(int, const Vec<D1>&, Vec<D1>&)> p1;
  std::function<void(int, const Vec<D2>&, Vec<D2>&)> p2;
  std::function<void(int, const Vec<D3>&, Vec<D3>&)> p3;

  template <class F>
  static ParamFn make(int m, int n, F f) {
    ParamFn e;
    e.m = m;
    e.n = n;
    e.p0 = [f](int c, const Vec<double>& u, Vec<double>& x) { f(c, u, x); };
    e.p1 = [f](int c, const Vec<D1>& u, Vec<D1>& x) { f(c, u, x); };
    e.p2 = [f](int c, const Vec<D2>& u, Vec<D2>& x) { f(c, u, x); };
    e.p3 = [f](int c, const Vec<D3>& u, Vec<D3>& x) { f(c, u, x); };
    return e;
  }
  explicit operator bool() const { return static_cast<bool>(p0); }
};

// Plain smooth map between coordinate vectors (chart transitions, embeddings).
struct MapFn {
  int in = 0, out = 0;
  std::function<void(const Vec<double>&, Vec<double>&)> f0;
  std::function<void(const Vec<D1>&, Vec<D1>&)> f1;

  template <class F>
  static MapFn make(int in, int out, F f) {
    MapFn e;
    e.in = in;
    e.out = out;
    e.f0 = [f](const Vec<double>& x, Vec<double>& y) { f(x, y); };
    e.f1 = [f](const Vec<D1>& x, Vec<D1>& y) { f(x, y); };
    return e;
  }
  explicit operator bool() const { return static_cast<bool>(f0); }
};

// Polynomial on a Euclidean coordinate space (Cartan-Munzner gate input).
struct PolyFn {
  int n = 0;
  int degree = 0;
  std::function<double(const Vec<double>&)> e0;
  std::function<D1(const Vec<D1>&)> e1;
  std::function<D2(const Vec<D2>&)> e2;

  template <class F>
  static PolyFn make(int n, int degree, F f) {
    PolyFn e;
    e.n = n;
    e.degree = degree;
    e.e0 = [f](const Vec<double>& x) { return f(x); };
    e.e1 = [f](const Vec<D1>& x) { return f(x); };
    e.e2 = [f](const Vec<D2>& x) { return f(x); };
    return e;
  }
  explicit operator bool() const { return static_cast<bool>(e0); }
};

}  // namespace tubegeo
