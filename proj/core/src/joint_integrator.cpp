#include "joint_integrator.hpp"

#include <cmath>

#include "tubegeo/errors.hpp"
#include "tubegeo/jets.hpp"

namespace tubegeo::detail {

namespace {

struct Deriv {
  Eigen::VectorXd dx, dv;
  Eigen::MatrixXd dE;
};

Deriv rhs(const ChartedManifold& M, int chart, const Eigen::VectorXd& x, const Eigen::VectorXd& v,
          const Eigen::MatrixXd& E) {
  const int n = M.dim();
  MetricJet1 jet = metric_jet1(M.chart(chart).metric, x);
  Eigen::LLT<Eigen::MatrixXd> llt(jet.g);
  if (llt.info() != Eigen::Success)
    throw DegenerateMetric(M.label() + ": metric not SPD along trajectory");
  Eigen::MatrixXd ginv = llt.solve(Eigen::MatrixXd::Identity(n, n));

  // Gamma^k_ij contracted with v on one slot.
  std::vector<Eigen::MatrixXd> gam(n);
  for (int k = 0; k < n; ++k) {
    gam[k].setZero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        double s = 0;
        for (int l = 0; l < n; ++l)
          s += ginv(k, l) * (jet.dg[i](j, l) + jet.dg[j](i, l) - jet.dg[l](i, j));
        gam[k](i, j) = 0.5 * s;
        gam[k](j, i) = 0.5 * s;
      }
  }

  Deriv d;
  d.dx = v;
  d.dv.setZero(n);
  for (int k = 0; k < n; ++k) d.dv[k] = -v.dot(gam[k] * v);
  d.dE.setZero(n, E.cols());
  for (int c = 0; c < E.cols(); ++c)
    for (int k = 0; k < n; ++k) d.dE(k, c) = -v.dot(gam[k] * E.col(c));
  return d;
}

JointState apply(const JointState& s, const Deriv& d, double h) {
  JointState out = s;
  out.x += h * d.dx;
  out.v += h * d.dv;
  out.E += h * d.dE;
  return out;
}

}  // namespace

JointState joint_step(const ChartedManifold& M, const JointState& s, double h) {
  Deriv k1 = rhs(M, s.chart, s.x, s.v, s.E);
  JointState s2 = apply(s, k1, 0.5 * h);
  Deriv k2 = rhs(M, s2.chart, s2.x, s2.v, s2.E);
  JointState s3 = apply(s, k2, 0.5 * h);
  Deriv k3 = rhs(M, s3.chart, s3.x, s3.v, s3.E);
  JointState s4 = apply(s, k3, h);
  Deriv k4 = rhs(M, s4.chart, s4.x, s4.v, s4.E);

  JointState out = s;
  out.x += (h / 6.0) * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
  out.v += (h / 6.0) * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
  out.E += (h / 6.0) * (k1.dE + 2.0 * k2.dE + 2.0 * k3.dE + k4.dE);
  return out;
}

JointNodes integrate_joint(const ChartedManifold& M, const JointState& s0, double t_max,
                           double step, double step_tol) {
  if (step <= 0) throw Error("integrate_joint: step must be positive");
  JointNodes out;
  JointState s = s0;
  double t = 0;
  long k = 0;
  out.t.push_back(t);
  out.s.push_back(s);

  while (t < t_max - 1e-14) {
    // Node times are k*step (no accumulation drift), final node lands on t_max.
    const double t_next = std::min(t_max, static_cast<double>(k + 1) * step);
    const double h = t_next - t;
    JointState full = joint_step(M, s, h);
    JointState half = joint_step(M, joint_step(M, s, 0.5 * h), 0.5 * h);
    const double err = (full.x - half.x).cwiseAbs().maxCoeff() +
                       (full.v - half.v).cwiseAbs().maxCoeff();
    if (err > step_tol)
      throw StepFailure(M.label() + ": step error estimate " + std::to_string(err) + " at t=" +
                        std::to_string(t));
    out.max_err = std::max(out.max_err, err);
    s = half;
    t = t_next;
    ++k;

    // Chart hygiene at nodes; transitions are isometries, so the transported
    // frame transfers by the transition differential.
    if (!M.in_domain({s.chart, s.x})) {
      const int pref = M.preferred_chart({s.chart, s.x});
      if (pref == s.chart) throw ChartExit(M.label() + ": trajectory left all charts");
    }
    const int pref = M.preferred_chart({s.chart, s.x});
    if (pref != s.chart) {
      ChartPoint p{s.chart, s.x};
      JointState moved;
      moved.chart = pref;
      moved.x = M.transfer_point(p, pref).x;
      moved.v = M.transfer_vector(p, s.v, pref);
      moved.E.resize(s.E.rows(), s.E.cols());
      for (int c = 0; c < s.E.cols(); ++c) moved.E.col(c) = M.transfer_vector(p, s.E.col(c), pref);
      s = moved;
    }
    out.t.push_back(t);
    out.s.push_back(s);
  }
  return out;
}

}  // namespace tubegeo::detail
