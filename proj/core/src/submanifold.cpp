#include "tubegeo/submanifold.hpp"

#include <cmath>

#include "tubegeo/curvature.hpp"

namespace tubegeo {

ChartPoint SubmanifoldPatch::point_at(const Eigen::VectorXd& u) const {
  ParamJet jet = param_jet(param_, chart_of_(u), u);
  return ChartPoint{chart_of_(u), jet.x};
}

ParamJet SubmanifoldPatch::jet_at(const Eigen::VectorXd& u) const {
  return param_jet(param_, chart_of_(u), u);
}

Eigen::MatrixXd SubmanifoldPatch::tangent_frame(const Eigen::VectorXd& u) const {
  return jet_at(u).jac;
}

Eigen::MatrixXd SubmanifoldPatch::normal_frame(const Eigen::VectorXd& u) const {
  return normal_frame_(chart_of_(u), u);
}

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& G, const Eigen::MatrixXd& cols, double tol) {
  Eigen::MatrixXd out = cols;
  for (int j = 0; j < out.cols(); ++j) {
    for (int i = 0; i < j; ++i) {
      const double proj = out.col(i).dot(G * out.col(j));
      out.col(j) -= proj * out.col(i);
    }
    const double nrm = std::sqrt(out.col(j).dot(G * out.col(j)));
    if (nrm < tol) throw ImmersionFailure("orthonormalize: dependent column " + std::to_string(j));
    out.col(j) /= nrm;
  }
  return out;
}

BaseFrames base_frames(const SubmanifoldPatch& P, const Eigen::VectorXd& u,
                       const Eigen::VectorXd& v_coeffs) {
  const int n = P.ambient_dim();
  const int m = P.m();
  const int c = P.codim();
  if (v_coeffs.size() != c)
    throw Error("base_frames: v coefficient count " + std::to_string(v_coeffs.size()) +
                " != codimension " + std::to_string(c));
  if (std::abs(v_coeffs.norm() - 1.0) > 1e-8)
    throw NotUnitVector("base_frames: normal coefficients not unit");

  BaseFrames f;
  f.p = P.point_at(u);
  f.g = metric_at(*P.ambient(), f.p);
  f.tangent_raw = (m > 0) ? P.tangent_frame(u) : Eigen::MatrixXd(n, 0);
  f.tangent = (m > 0) ? orthonormalize(f.g, f.tangent_raw) : Eigen::MatrixXd(n, 0);
  f.normal = P.normal_frame(u);
  f.v = f.normal * v_coeffs;

  // Complete v to an orthonormal basis of the normal space, keeping the
  // catalog frame order (the one dependent candidate is dropped).
  Eigen::MatrixXd basis(n, c);
  basis.col(0) = f.v;
  int filled = 1;
  for (int j = 0; j < c && filled < c; ++j) {
    Eigen::VectorXd w = f.normal.col(j);
    for (int i = 0; i < filled; ++i) w -= basis.col(i).dot(f.g * w) * basis.col(i);
    const double nrm = std::sqrt(w.dot(f.g * w));
    if (nrm < 1e-8) continue;
    basis.col(filled++) = w / nrm;
  }
  if (filled != c) throw ImmersionFailure("base_frames: could not complete normal frame");
  f.normal_complement = basis.rightCols(c - 1);

  f.frame.resize(n, n);
  if (m > 0) f.frame.leftCols(m) = f.tangent;
  if (c > 1) f.frame.middleCols(m, c - 1) = f.normal_complement;
  f.frame.col(n - 1) = f.v;
  return f;
}

}  // namespace tubegeo
