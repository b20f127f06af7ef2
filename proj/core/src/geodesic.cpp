#include "tubegeo/geodesic.hpp"

#include <cmath>

#include "joint_integrator.hpp"
#include "tubegeo/curvature.hpp"
#include "tubegeo/errors.hpp"

namespace tubegeo {

std::size_t PathRecord::node_count() const {
  std::size_t n = 0;
  for (const auto& s : segments) n += s.nodes.size();
  return n;
}

namespace {

// Nodes come out of the integrator post-transfer; rebuild segments with a
// duplicated boundary node (same t, both charts) so transport along the
// record can hand frames across.
PathRecord build_record(const ChartedManifold& M, const detail::JointNodes& nodes, double t_max,
                        double max_err) {
  PathRecord rec;
  rec.t_max = t_max;
  rec.max_step_error = max_err;
  PathSegment seg;
  seg.chart = nodes.s.front().chart;
  for (std::size_t i = 0; i < nodes.s.size(); ++i) {
    const auto& st = nodes.s[i];
    if (st.chart != seg.chart) {
      ChartPoint back = M.transfer_point({st.chart, st.x}, seg.chart);
      Eigen::VectorXd vback = M.transfer_vector({st.chart, st.x}, st.v, seg.chart);
      seg.nodes.push_back(PathNode{nodes.t[i], back.x, vback});
      rec.segments.push_back(seg);
      seg = PathSegment{};
      seg.chart = st.chart;
    }
    seg.nodes.push_back(PathNode{nodes.t[i], st.x, st.v});
  }
  rec.segments.push_back(seg);
  return rec;
}

}  // namespace

PathRecord integrate_geodesic(const ChartedManifold& M, const ChartPoint& p,
                              const Eigen::VectorXd& w, double t_max, double step) {
  M.require_in_domain(p);
  Eigen::MatrixXd g = metric_at(M, p);
  const double speed = w.dot(g * w);
  if (std::abs(speed - 1.0) > 1e-8)
    throw NotUnitVector(M.label() + ": geodesic direction not unit, <w,w>_g = " +
                        std::to_string(speed));

  detail::JointState s0;
  s0.chart = p.chart;
  s0.x = p.x;
  s0.v = w;
  s0.E.resize(M.dim(), 0);
  detail::JointNodes nodes = detail::integrate_joint(M, s0, t_max, step);
  return build_record(M, nodes, t_max, nodes.max_err);
}

namespace {

// Cubic Hermite position/velocity inside one node interval.
void hermite(const PathNode& a, const PathNode& b, double t, Eigen::VectorXd& x,
             Eigen::VectorXd& v) {
  const double h = b.t - a.t;
  const double s = (t - a.t) / h;
  const double s2 = s * s, s3 = s2 * s;
  x = (2 * s3 - 3 * s2 + 1) * a.x + (s3 - 2 * s2 + s) * h * a.v + (-2 * s3 + 3 * s2) * b.x +
      (s3 - s2) * h * b.v;
  v = ((6 * s2 - 6 * s) / h) * a.x + (3 * s2 - 4 * s + 1) * a.v + ((6 * s - 6 * s2) / h) * b.x +
      (3 * s2 - 2 * s) * b.v;
}

Eigen::MatrixXd transport_rhs(const ChartedManifold& M, int chart, const Eigen::VectorXd& x,
                              const Eigen::VectorXd& v, const Eigen::MatrixXd& E) {
  std::vector<Eigen::MatrixXd> gam = christoffel_at(M, ChartPoint{chart, x});
  Eigen::MatrixXd d(E.rows(), E.cols());
  for (int c = 0; c < E.cols(); ++c)
    for (int k = 0; k < static_cast<int>(E.rows()); ++k) d(k, c) = -v.dot(gam[k] * E.col(c));
  return d;
}

}  // namespace

std::vector<Eigen::MatrixXd> parallel_transport_frame(const ChartedManifold& M,
                                                      const PathRecord& path,
                                                      const Eigen::MatrixXd& frame0) {
  std::vector<Eigen::MatrixXd> out;
  Eigen::MatrixXd E = frame0;
  for (std::size_t si = 0; si < path.segments.size(); ++si) {
    const PathSegment& seg = path.segments[si];
    if (si > 0) {
      // Boundary nodes share t; transfer the frame into this segment's chart.
      const PathSegment& prev = path.segments[si - 1];
      ChartPoint bp{prev.chart, prev.nodes.back().x};
      Eigen::MatrixXd moved(E.rows(), E.cols());
      for (int c = 0; c < E.cols(); ++c) moved.col(c) = M.transfer_vector(bp, E.col(c), seg.chart);
      E = moved;
    }
    out.push_back(E);
    for (std::size_t i = 0; i + 1 < seg.nodes.size(); ++i) {
      const PathNode& a = seg.nodes[i];
      const PathNode& b = seg.nodes[i + 1];
      const double h = b.t - a.t;
      Eigen::VectorXd xm, vm;
      hermite(a, b, a.t + 0.5 * h, xm, vm);

      Eigen::MatrixXd k1 = transport_rhs(M, seg.chart, a.x, a.v, E);
      Eigen::MatrixXd k2 = transport_rhs(M, seg.chart, xm, vm, E + 0.5 * h * k1);
      Eigen::MatrixXd k3 = transport_rhs(M, seg.chart, xm, vm, E + 0.5 * h * k2);
      Eigen::MatrixXd k4 = transport_rhs(M, seg.chart, b.x, b.v, E + h * k3);
      E += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      out.push_back(E);
    }
  }
  return out;
}

}  // namespace tubegeo
