#include "tubegeo/curvature.hpp"

#include <cmath>

#include "tubegeo/jets.hpp"

namespace tubegeo {

namespace {

void check_spd(const Eigen::MatrixXd& g, const std::string& label) {
  const double asym = (g - g.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12)
    throw DegenerateMetric(label + ": metric asymmetry " + std::to_string(asym));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g, Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) <= 1e-12)
    throw DegenerateMetric(label + ": metric not positive definite (min eig " +
                           std::to_string(es.eigenvalues()(0)) + ")");
}

std::vector<Eigen::MatrixXd> christoffel_from_jet(const Eigen::MatrixXd& ginv,
                                                  const std::vector<Eigen::MatrixXd>& dg) {
  const int n = static_cast<int>(ginv.rows());
  std::vector<Eigen::MatrixXd> gam(n, Eigen::MatrixXd::Zero(n, n));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        double s = 0;
        for (int l = 0; l < n; ++l)
          s += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        gam[k](i, j) = 0.5 * s;
        gam[k](j, i) = 0.5 * s;
      }
  return gam;
}

}  // namespace

double CurvaturePacket::curv(const Eigen::VectorXd& X, const Eigen::VectorXd& Y,
                             const Eigen::VectorXd& Z, const Eigen::VectorXd& W) const {
  const int n = static_cast<int>(g.rows());
  Eigen::VectorXd img = Eigen::VectorXd::Zero(n);  // components of R_XY Z
  for (int i = 0; i < n; ++i) {
    if (X[i] == 0.0) continue;
    for (int j = 0; j < n; ++j) {
      if (Y[j] == 0.0) continue;
      const double xy = X[i] * Y[j];
      for (int k = 0; k < n; ++k) {
        if (Z[k] == 0.0) continue;
        const double xyz = xy * Z[k];
        for (int l = 0; l < n; ++l) img[l] += xyz * riemann[i][j](k, l);
      }
    }
  }
  return img.dot(g * W);
}

double CurvaturePacket::sectional(const Eigen::VectorXd& X, const Eigen::VectorXd& Y) const {
  const double gxx = inner(X, X), gyy = inner(Y, Y), gxy = inner(X, Y);
  const double denom = gxx * gyy - gxy * gxy;
  return curv(X, Y, X, Y) / denom;
}

Eigen::MatrixXd metric_at(const ChartedManifold& M, const ChartPoint& p) {
  M.require_in_domain(p);
  const MetricFn& f = M.chart(p.chart).metric;
  Vec<double> x(M.dim());
  for (int i = 0; i < M.dim(); ++i) x[i] = p.x[i];
  Mat<double> g(M.dim(), M.dim());
  f.m0(x, g);
  Eigen::MatrixXd G(M.dim(), M.dim());
  for (int i = 0; i < M.dim(); ++i)
    for (int j = 0; j < M.dim(); ++j) G(i, j) = g(i, j);
  check_spd(G, M.label());
  return G;
}

std::vector<Eigen::MatrixXd> christoffel_at(const ChartedManifold& M, const ChartPoint& p) {
  M.require_in_domain(p);
  MetricJet1 jet = metric_jet1(M.chart(p.chart).metric, p.x);
  check_spd(jet.g, M.label());
  Eigen::LLT<Eigen::MatrixXd> llt(jet.g);
  Eigen::MatrixXd ginv = llt.solve(Eigen::MatrixXd::Identity(M.dim(), M.dim()));
  return christoffel_from_jet(ginv, jet.dg);
}

std::vector<Eigen::MatrixXd> christoffel_at_fd(const ChartedManifold& M, const ChartPoint& p) {
  M.require_in_domain(p);
  MetricJet1 jet = metric_jet1_fd(M.chart(p.chart).metric, p.x);
  check_spd(jet.g, M.label());
  Eigen::LLT<Eigen::MatrixXd> llt(jet.g);
  Eigen::MatrixXd ginv = llt.solve(Eigen::MatrixXd::Identity(M.dim(), M.dim()));
  return christoffel_from_jet(ginv, jet.dg);
}

CurvaturePacket riemann_at(const ChartedManifold& M, const ChartPoint& p) {
  M.require_in_domain(p);
  const int n = M.dim();
  MetricJet jet = metric_jet(M.chart(p.chart).metric, p.x);
  check_spd(jet.g, M.label());

  CurvaturePacket pk;
  pk.point = p;
  pk.g = jet.g;
  Eigen::LLT<Eigen::MatrixXd> llt(jet.g);
  pk.ginv = llt.solve(Eigen::MatrixXd::Identity(n, n));
  pk.christoffel = christoffel_from_jet(pk.ginv, jet.dg);

  // dginv[i] = -ginv * dg[i] * ginv
  std::vector<Eigen::MatrixXd> dginv(n);
  for (int i = 0; i < n; ++i) dginv[i] = -pk.ginv * jet.dg[i] * pk.ginv;

  // dgam[i][l](j,k) = d_i Gamma^l_jk
  std::vector<std::vector<Eigen::MatrixXd>> dgam(
      n, std::vector<Eigen::MatrixXd>(n, Eigen::MatrixXd::Zero(n, n)));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l)
      for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) {
          double s = 0;
          for (int m = 0; m < n; ++m) {
            s += dginv[i](l, m) * (jet.dg[j](k, m) + jet.dg[k](j, m) - jet.dg[m](j, k));
            s += pk.ginv(l, m) *
                 (jet.d2g[i][j](k, m) + jet.d2g[i][k](j, m) - jet.d2g[i][m](j, k));
          }
          dgam[i][l](j, k) = 0.5 * s;
          dgam[i][l](k, j) = 0.5 * s;
        }

  // R_{d_i d_j} d_k = sum_l [ d_j Gamma^l_ik - d_i Gamma^l_jk
  //                           + Gamma^m_ik Gamma^l_jm - Gamma^m_jk Gamma^l_im ] d_l
  pk.riemann.assign(n, std::vector<Eigen::MatrixXd>(n, Eigen::MatrixXd::Zero(n, n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double s = dgam[j][l](i, k) - dgam[i][l](j, k);
          for (int m = 0; m < n; ++m)
            s += pk.christoffel[m](i, k) * pk.christoffel[l](j, m) -
                 pk.christoffel[m](j, k) * pk.christoffel[l](i, m);
          pk.riemann[i][j](k, l) = s;
        }
    }

  pk.ricci.setZero(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double s = 0;
      for (int j = 0; j < n; ++j) s += pk.riemann[i][j](k, j);
      pk.ricci(i, k) = s;
    }
  // ricci(X,Z) = trace(Y -> R_XY Z); symmetric for Levi-Civita.
  pk.ricci = 0.5 * (pk.ricci + pk.ricci.transpose()).eval();

  pk.scalar = (pk.ginv * pk.ricci).trace();
  return pk;
}

CurvatureScalars curvature_scalars_at(const ChartedManifold& M, const ChartPoint& p,
                                      const Eigen::VectorXd& v, const Eigen::MatrixXd& frame) {
  CurvaturePacket pk = riemann_at(M, p);
  const double vnorm = v.dot(pk.g * v);
  if (std::abs(vnorm - 1.0) > 1e-8)
    throw NotUnitVector(M.label() + ": |<v,v>_g - 1| = " + std::to_string(std::abs(vnorm - 1.0)));
  CurvatureScalars out;
  out.ricci_vv = v.dot(pk.ricci * v);
  out.scalar = pk.scalar;
  out.sectional_list.reserve(static_cast<std::size_t>(frame.cols()));
  for (int a = 0; a < frame.cols(); ++a) out.sectional_list.push_back(pk.sectional(v, frame.col(a)));
  return out;
}

}  // namespace tubegeo
