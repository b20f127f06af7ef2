#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tubegeo/chart.hpp"

namespace tubegeo {

// Pointwise geometric data in one chart. The stored (1,3) curvature array
// realizes the operator (X,Y,Z) -> R_XY Z with
//   R_XY Z = nabla_[X,Y] Z - [nabla_X, nabla_Y] Z,
// normalized so that on the unit round sphere <R_vu v, u> = +1 for
// orthonormal v,u. Under this convention the tube Riccati equation reads
// S' = S^2 + R with R(t)U = R_NU N.
struct CurvaturePacket {
  ChartPoint point;
  Eigen::MatrixXd g;     // metric
  Eigen::MatrixXd ginv;  // inverse metric
  // christoffel[k](i,j) = Gamma^k_ij
  std::vector<Eigen::MatrixXd> christoffel;
  // riemann[i][j](k,l): component along d_l of R_{d_i d_j} d_k
  std::vector<std::vector<Eigen::MatrixXd>> riemann;
  Eigen::MatrixXd ricci;
  double scalar = 0;

  // <R_XY Z, W> for chart-coordinate vectors.
  double curv(const Eigen::VectorXd& X, const Eigen::VectorXd& Y, const Eigen::VectorXd& Z,
              const Eigen::VectorXd& W) const;
  // Sectional curvature of span(X, Y); X, Y need not be orthonormal.
  double sectional(const Eigen::VectorXd& X, const Eigen::VectorXd& Y) const;
  double inner(const Eigen::VectorXd& X, const Eigen::VectorXd& Y) const {
    return X.dot(g * Y);
  }
};

// Metric evaluation with the SPD gate (symmetry to 1e-12, smallest eigenvalue
// above 1e-12); DegenerateMetric on failure, never regularized.
Eigen::MatrixXd metric_at(const ChartedManifold& M, const ChartPoint& p);

// Christoffel symbols from first metric derivatives (Levi-Civita formula).
std::vector<Eigen::MatrixXd> christoffel_at(const ChartedManifold& M, const ChartPoint& p);

// Finite-difference cross-check route for the invariant tests.
std::vector<Eigen::MatrixXd> christoffel_at_fd(const ChartedManifold& M, const ChartPoint& p);

// Full curvature packet (Riemann, Ricci, scalar).
CurvaturePacket riemann_at(const ChartedManifold& M, const ChartPoint& p);

struct CurvatureScalars {
  double ricci_vv = 0;
  std::vector<double> sectional_list;  // K(v, e_a) per frame vector
  double scalar = 0;
};

// v must be unit; frame columns are tangent vectors (typically an orthonormal
// complement of v).
CurvatureScalars curvature_scalars_at(const ChartedManifold& M, const ChartPoint& p,
                                      const Eigen::VectorXd& v, const Eigen::MatrixXd& frame);

}  // namespace tubegeo
