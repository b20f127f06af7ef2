#include "tubegeo/shape.hpp"

#include <algorithm>
#include <cmath>

#include "tubegeo/curvature.hpp"

namespace tubegeo {

Eigen::VectorXd shape_eigenvalues(const Eigen::MatrixXd& S) {
  Eigen::MatrixXd sym = 0.5 * (S + S.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym, Eigen::EigenvaluesOnly);
  Eigen::VectorXd ev = es.eigenvalues();
  return ev.reverse();
}

namespace {

// <nabla_{X_a} X_b, v> for the raw Jacobian frame: second fundamental form
// contracted with v.
Eigen::MatrixXd second_form(const SubmanifoldPatch& P, const Eigen::VectorXd& u,
                            const BaseFrames& f) {
  const int n = P.ambient_dim();
  const int m = P.m();
  ParamJet jet = P.jet_at(u);
  if (m > 0) {
    Eigen::FullPivLU<Eigen::MatrixXd> lu(jet.jac);
    if (lu.rank() < m)
      throw ImmersionFailure(P.label() + ": parametrization Jacobian rank " +
                             std::to_string(lu.rank()) + " < m");
  }
  std::vector<Eigen::MatrixXd> gam = christoffel_at(*P.ambient(), f.p);

  Eigen::VectorXd gv = f.g * f.v;
  Eigen::MatrixXd Braw(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      double s = 0;
      for (int k = 0; k < n; ++k) {
        double II_k = jet.hess[k](a, b);
        for (int i = 0; i < n; ++i) II_k += jet.jac.col(a)[i] * (gam[k].row(i).dot(jet.jac.col(b)));
        s += II_k * gv[k];
      }
      Braw(a, b) = s;
      Braw(b, a) = s;
    }
  return Braw;
}

// Change of basis from the raw Jacobian frame to the orthonormalized one.
Eigen::MatrixXd basis_change(const BaseFrames& f) {
  const int m = static_cast<int>(f.tangent.cols());
  if (m == 0) return Eigen::MatrixXd(0, 0);
  Eigen::MatrixXd gram = f.tangent_raw.transpose() * f.g * f.tangent_raw;
  Eigen::MatrixXd rhs = f.tangent_raw.transpose() * f.g * f.tangent;
  return gram.llt().solve(rhs);
}

}  // namespace

Eigen::MatrixXd shape_of_submanifold(const SubmanifoldPatch& P, const Eigen::VectorXd& u,
                                     const Eigen::VectorXd& v_coeffs) {
  BaseFrames f = base_frames(P, u, v_coeffs);
  const int m = P.m();
  if (m == 0) return Eigen::MatrixXd(0, 0);
  Eigen::MatrixXd Braw = second_form(P, u, f);
  Eigen::MatrixXd R = basis_change(f);
  Eigen::MatrixXd T = R.transpose() * Braw * R;
  return 0.5 * (T + T.transpose());
}

SeriesCoefficients series_coefficients(const SubmanifoldPatch& P, const Eigen::VectorXd& u,
                                       const Eigen::VectorXd& v_coeffs) {
  BaseFrames f = base_frames(P, u, v_coeffs);
  const int n = P.ambient_dim();
  const int m = P.m();
  const int fdim = n - m - 1;

  SeriesCoefficients sc;
  sc.T_v = shape_of_submanifold(P, u, v_coeffs);

  CurvaturePacket pk = riemann_at(*P.ambient(), f.p);
  auto Rv = [&](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return pk.curv(f.v, a, f.v, b);
  };

  sc.A.setZero(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) sc.A(a, b) = Rv(f.tangent.col(a), f.tangent.col(b));
  sc.A += sc.T_v * sc.T_v;

  sc.B.setZero(m, fdim);
  for (int a = 0; a < m; ++a)
    for (int k = 0; k < fdim; ++k) sc.B(a, k) = Rv(f.tangent.col(a), f.normal_complement.col(k));
  // B stores <R_{v a} v, k>; C the same block with the 1/3 factor.
  sc.C = sc.B.transpose() / 3.0;

  sc.D.setZero(fdim, fdim);
  for (int l = 0; l < fdim; ++l)
    for (int k = l; k < fdim; ++k) {
      const double val = Rv(f.normal_complement.col(l), f.normal_complement.col(k)) / 3.0;
      sc.D(l, k) = val;
      sc.D(k, l) = val;
    }

  sc.v_bar.setZero(n - m);
  sc.v_bar[n - m - 1] = 1.0;
  return sc;
}

Eigen::MatrixXd SeriesCoefficients::series_matrix(double t) const {
  const int m = static_cast<int>(T_v.rows());
  const int fdim = static_cast<int>(D.rows());
  Eigen::MatrixXd S(m + fdim, m + fdim);
  S.topLeftCorner(m, m) = T_v + t * A;
  S.topRightCorner(m, fdim) = t * B;
  S.bottomLeftCorner(fdim, m) = t * C;
  S.bottomRightCorner(fdim, fdim) =
      -(1.0 / t) * Eigen::MatrixXd::Identity(fdim, fdim) + t * D;
  return S;
}

ShapeSample series_seed(const SubmanifoldPatch& P, const Eigen::VectorXd& u,
                        const Eigen::VectorXd& v_coeffs, double t0) {
  if (t0 <= 0) throw Error("series_seed: t0 must be positive");
  SeriesCoefficients sc = series_coefficients(P, u, v_coeffs);
  const int fdim = static_cast<int>(sc.D.rows());

  ShapeSample s;
  s.t = t0;
  s.S_bar = sc.series_matrix(t0);
  s.H = s.S_bar.trace();
  s.eigenvalues = shape_eigenvalues(s.S_bar);
  s.method = ShapeMethod::series;
  // Analytic trace derivative of the expansion.
  s.H_prime = static_cast<double>(fdim) / (t0 * t0) + sc.A.trace() + sc.D.trace();
  BaseFrames f = base_frames(P, u, v_coeffs);
  CurvaturePacket pk = riemann_at(*P.ambient(), f.p);
  s.ricci_NN = f.v.dot(pk.ricci * f.v);
  return s;
}

}  // namespace tubegeo
