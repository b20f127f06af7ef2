#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tubegeo/functor.hpp"

namespace tubegeo {

// Value and exact first/second derivatives of a metric at a chart point.
// dg[k](i,j)     = d g_ij / d x_k
// d2g[k][l](i,j) = d^2 g_ij / d x_k d x_l
struct MetricJet {
  Eigen::MatrixXd g;
  std::vector<Eigen::MatrixXd> dg;
  std::vector<std::vector<Eigen::MatrixXd>> d2g;
};

// Value, gradient and Hessian of a scalar field in chart coordinates.
struct ScalarJet {
  double f = 0;
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;
};

// Value, Jacobian and second derivatives of a parametrization.
// jac(k,a) = d phi^k / d u_a ; hess[k](a,b) = d^2 phi^k / d u_a d u_b
struct ParamJet {
  Eigen::VectorXd x;
  Eigen::MatrixXd jac;
  std::vector<Eigen::MatrixXd> hess;
};

MetricJet metric_jet(const MetricFn& f, const Eigen::VectorXd& x);

// First-derivative-only variant for inner loops that need Christoffel symbols
// but not curvature.
struct MetricJet1 {
  Eigen::MatrixXd g;
  std::vector<Eigen::MatrixXd> dg;
};
MetricJet1 metric_jet1(const MetricFn& f, const Eigen::VectorXd& x);

// Finite-difference metric derivatives, h = cbrt(eps)*max(1,|x_k|).
// Cross-check oracle for the dual-number engine.
MetricJet1 metric_jet1_fd(const MetricFn& f, const Eigen::VectorXd& x);

ScalarJet scalar_jet(const ScalarFn& f, int chart, const Eigen::VectorXd& x);

ParamJet param_jet(const ParamFn& f, int chart, const Eigen::VectorXd& u);

// Jacobian of a plain map at x, and directional derivative df(x)[w].
Eigen::MatrixXd map_jacobian(const MapFn& f, const Eigen::VectorXd& x);
Eigen::VectorXd map_apply(const MapFn& f, const Eigen::VectorXd& x);
Eigen::VectorXd map_differential(const MapFn& f, const Eigen::VectorXd& x,
                                 const Eigen::VectorXd& w);

}  // namespace tubegeo
