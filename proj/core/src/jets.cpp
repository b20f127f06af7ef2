#include "tubegeo/jets.hpp"

#include <cmath>
#include <limits>

namespace tubegeo {

namespace {

Vec<double> to_vec(const Eigen::VectorXd& x) {
  Vec<double> v(static_cast<int>(x.size()));
  for (int i = 0; i < v.size(); ++i) v[i] = x[i];
  return v;
}

Vec<D2> seed_d2(const Eigen::VectorXd& x, int k, int l) {
  Vec<D2> v(static_cast<int>(x.size()));
  for (int i = 0; i < v.size(); ++i) v[i] = D2(x[i]);
  v[k].b.a += 1.0;  // outer direction
  v[l].a.b += 1.0;  // inner direction
  return v;
}

Vec<D1> seed_d1(const Eigen::VectorXd& x, int k) {
  Vec<D1> v(static_cast<int>(x.size()));
  for (int i = 0; i < v.size(); ++i) v[i] = D1(x[i]);
  v[k].b = 1.0;
  return v;
}

}  // namespace

MetricJet metric_jet(const MetricFn& f, const Eigen::VectorXd& x) {
  const int n = f.dim;
  MetricJet jet;
  jet.g.setZero(n, n);
  jet.dg.assign(n, Eigen::MatrixXd::Zero(n, n));
  jet.d2g.assign(n, std::vector<Eigen::MatrixXd>(n, Eigen::MatrixXd::Zero(n, n)));

  Mat<D2> g(n, n);
  for (int k = 0; k < n; ++k) {
    for (int l = k; l < n; ++l) {
      Vec<D2> xx = seed_d2(x, k, l);
      f.m2(xx, g);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const D2& e = g(i, j);
          if (k == 0 && l == 0) jet.g(i, j) = e.a.a;
          if (l == k) {
            jet.dg[k](i, j) = e.b.a;
          }
          jet.d2g[k][l](i, j) = e.b.b;
          jet.d2g[l][k](i, j) = e.b.b;
        }
      }
    }
  }
  return jet;
}

MetricJet1 metric_jet1(const MetricFn& f, const Eigen::VectorXd& x) {
  const int n = f.dim;
  MetricJet1 jet;
  jet.g.setZero(n, n);
  jet.dg.assign(n, Eigen::MatrixXd::Zero(n, n));

  Mat<D1> g(n, n);
  for (int k = 0; k < n; ++k) {
    Vec<D1> xx = seed_d1(x, k);
    f.m1(xx, g);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (k == 0) jet.g(i, j) = g(i, j).a;
        jet.dg[k](i, j) = g(i, j).b;
      }
    }
  }
  return jet;
}

MetricJet1 metric_jet1_fd(const MetricFn& f, const Eigen::VectorXd& x) {
  const int n = f.dim;
  const double base = std::cbrt(std::numeric_limits<double>::epsilon());
  MetricJet1 jet;
  jet.dg.assign(n, Eigen::MatrixXd::Zero(n, n));

  Mat<double> g(n, n);
  f.m0(to_vec(x), g);
  jet.g.setZero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) jet.g(i, j) = g(i, j);

  Mat<double> gp(n, n), gm(n, n);
  for (int k = 0; k < n; ++k) {
    const double h = base * std::max(1.0, std::abs(x[k]));
    Eigen::VectorXd xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    f.m0(to_vec(xp), gp);
    f.m0(to_vec(xm), gm);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) jet.dg[k](i, j) = (gp(i, j) - gm(i, j)) / (2.0 * h);
  }
  return jet;
}

ScalarJet scalar_jet(const ScalarFn& f, int chart, const Eigen::VectorXd& x) {
  const int n = static_cast<int>(x.size());
  ScalarJet jet;
  jet.grad.setZero(n);
  jet.hess.setZero(n, n);
  for (int k = 0; k < n; ++k) {
    for (int l = k; l < n; ++l) {
      Vec<D2> xx = seed_d2(x, k, l);
      D2 v = f.s2(chart, xx);
      if (k == 0 && l == 0) jet.f = v.a.a;
      if (l == k) jet.grad[k] = v.b.a;
      jet.hess(k, l) = v.b.b;
      jet.hess(l, k) = v.b.b;
    }
  }
  return jet;
}

ParamJet param_jet(const ParamFn& f, int chart, const Eigen::VectorXd& u) {
  const int m = f.m, n = f.n;
  ParamJet jet;
  jet.x.setZero(n);
  jet.jac.setZero(n, m);
  jet.hess.assign(n, Eigen::MatrixXd::Zero(m, m));

  if (m == 0) {
    Vec<double> uu(0), out(n);
    f.p0(chart, uu, out);
    for (int i = 0; i < n; ++i) jet.x[i] = out[i];
    return jet;
  }

  Vec<D2> out(n);
  for (int a = 0; a < m; ++a) {
    for (int b = a; b < m; ++b) {
      Vec<D2> uu = seed_d2(u, a, b);
      f.p2(chart, uu, out);
      for (int k = 0; k < n; ++k) {
        const D2& e = out[k];
        if (a == 0 && b == 0) jet.x[k] = e.a.a;
        if (b == a) jet.jac(k, a) = e.b.a;
        jet.hess[k](a, b) = e.b.b;
        jet.hess[k](b, a) = e.b.b;
      }
    }
  }
  return jet;
}

Eigen::VectorXd map_apply(const MapFn& f, const Eigen::VectorXd& x) {
  Vec<double> in = to_vec(x);
  Vec<double> out(f.out);
  f.f0(in, out);
  Eigen::VectorXd y(f.out);
  for (int i = 0; i < f.out; ++i) y[i] = out[i];
  return y;
}

Eigen::MatrixXd map_jacobian(const MapFn& f, const Eigen::VectorXd& x) {
  Eigen::MatrixXd J(f.out, f.in);
  Vec<D1> out(f.out);
  for (int k = 0; k < f.in; ++k) {
    Vec<D1> xx = seed_d1(x, k);
    f.f1(xx, out);
    for (int i = 0; i < f.out; ++i) J(i, k) = out[i].b;
  }
  return J;
}

Eigen::VectorXd map_differential(const MapFn& f, const Eigen::VectorXd& x,
                                 const Eigen::VectorXd& w) {
  Vec<D1> xx(f.in);
  for (int i = 0; i < f.in; ++i) xx[i] = D1(x[i], w[i]);
  Vec<D1> out(f.out);
  f.f1(xx, out);
  Eigen::VectorXd y(f.out);
  for (int i = 0; i < f.out; ++i) y[i] = out[i].b;
  return y;
}

}  // namespace tubegeo
