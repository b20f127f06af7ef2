#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "tubegeo/fermi.hpp"
#include "tubegeo/submanifold.hpp"

namespace tubegeo {

enum class ShapeMethod { riccati, jacobi, series };

// Shape operator of the tube P_t at eta_v(t), expressed in the ray's
// transported orthonormal frame. The full operator extended by the ray
// direction annihilates it (S N = 0), so the (n-1)x(n-1) reduction carries
// all principal curvatures.
struct ShapeSample {
  double t = 0;
  Eigen::MatrixXd S_bar;
  double H = 0;                  // trace(S_bar)
  Eigen::VectorXd eigenvalues;   // sorted descending
  double riccati_residual = 0;   // |dS/dt - S^2 - R|_inf at this t
  double H_prime = 0;            // centered dH/dt
  double ricci_NN = 0;           // Ricci(eta', eta') at eta(t)
  ShapeMethod method = ShapeMethod::riccati;
  bool focal_flag = false;       // sample at/after blow-up truncation
};

// Blocks of the small-t expansion of the tube shape operator:
//   S_bar(t) ~ [[T_v + tA, tB], [tC, -(1/t) I + tD]]
// in the base frame (orthonormal tangent frame, normal complement of v).
struct SeriesCoefficients {
  Eigen::MatrixXd T_v;  // m x m
  Eigen::MatrixXd A;    // m x m
  Eigen::MatrixXd B;    // m x (n-m-1), equals 3 C^T by construction
  Eigen::MatrixXd C;    // (n-m-1) x m
  Eigen::MatrixXd D;    // (n-m-1) x (n-m-1)
  Eigen::VectorXd v_bar;

  Eigen::MatrixXd series_matrix(double t) const;
};

// Shape operator T_v of P in normal direction v, as a symmetric matrix in the
// g-orthonormalized tangent frame of base_frames (so its eigenvalues are the
// principal curvatures). Sign convention: <T_v X, Y> = <nabla_X Y, v>.
Eigen::MatrixXd shape_of_submanifold(const SubmanifoldPatch& P, const Eigen::VectorXd& u,
                                     const Eigen::VectorXd& v_coeffs);

SeriesCoefficients series_coefficients(const SubmanifoldPatch& P, const Eigen::VectorXd& u,
                                       const Eigen::VectorXd& v_coeffs);

// Expansion evaluated at small t0: the regular start the Riccati integration
// is seeded from.
ShapeSample series_seed(const SubmanifoldPatch& P, const Eigen::VectorXd& u,
                        const Eigen::VectorXd& v_coeffs, double t0 = 1e-2);

// Sorted-descending eigenvalues of the symmetrized matrix.
Eigen::VectorXd shape_eigenvalues(const Eigen::MatrixXd& S);

}  // namespace tubegeo
