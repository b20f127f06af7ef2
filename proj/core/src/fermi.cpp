#include "tubegeo/fermi.hpp"

#include <cmath>

#include "joint_integrator.hpp"

namespace tubegeo {

FermiRay normal_frame_ray(PatchPtr P, const Eigen::VectorXd& u, const Eigen::VectorXd& v_coeffs,
                          double t_max, double step) {
  FermiRay ray;
  ray.patch_ = P;
  ray.ambient_ = P->ambient();
  ray.u_ = u;
  ray.v_coeffs_ = v_coeffs;
  ray.base_ = base_frames(*P, u, v_coeffs);
  ray.t_max_ = t_max;
  ray.t_pad_ = 4.0 * step + 1e-3;
  ray.step_ = step;

  const int n = P->ambient_dim();
  detail::JointState s0;
  s0.chart = ray.base_.p.chart;
  s0.x = ray.base_.p.x;
  s0.v = ray.base_.v;
  s0.E = ray.base_.frame.leftCols(n - 1);
  detail::JointNodes nodes =
      detail::integrate_joint(*ray.ambient_, s0, t_max + ray.t_pad_, step);
  ray.max_step_error_ = nodes.max_err;

  ray.nodes_.reserve(nodes.s.size());
  for (std::size_t i = 0; i < nodes.s.size(); ++i) {
    RayState st;
    st.t = nodes.t[i];
    st.chart = nodes.s[i].chart;
    st.x = nodes.s[i].x;
    st.v = nodes.s[i].v;
    st.E = nodes.s[i].E;
    ray.nodes_.push_back(std::move(st));
  }
  ray.curvature_cache_.assign(ray.nodes_.size(), std::nullopt);
  return ray;
}

RayState FermiRay::state_at(double t) const {
  if (t < -1e-12 || t > t_max_ + t_pad_ + 1e-9)
    throw Error("FermiRay: t=" + std::to_string(t) + " outside [0, t_max]");
  t = std::min(std::max(t, 0.0), t_max_ + t_pad_);

  int k = static_cast<int>(std::floor(t / step_ + 1e-12));
  if (k >= node_count()) k = node_count() - 1;
  // Final node may sit below k*step when t_max is not a multiple of step.
  while (k > 0 && nodes_[static_cast<std::size_t>(k)].t > t + 1e-12) --k;

  const RayState& base = nodes_[static_cast<std::size_t>(k)];
  double dt = t - base.t;
  if (std::abs(dt) < 1e-13) {
    RayState out = base;
    out.t = t;
    return out;
  }

  detail::JointState s;
  s.chart = base.chart;
  s.x = base.x;
  s.v = base.v;
  s.E = base.E;
  while (dt > 1e-13) {
    const double h = std::min(dt, step_);
    s = detail::joint_step(*ambient_, s, h);
    dt -= h;
  }
  RayState out;
  out.t = t;
  out.chart = s.chart;
  out.x = s.x;
  out.v = s.v;
  out.E = s.E;
  return out;
}

namespace {

RayCurvature contract_curvature(const ChartedManifold& M, const RayState& st) {
  CurvaturePacket pk = riemann_at(M, ChartPoint{st.chart, st.x});
  const int n = M.dim();
  const int f = static_cast<int>(st.E.cols());
  RayCurvature rc;
  rc.R.setZero(f, f);
  const Eigen::VectorXd& N = st.v;
  for (int b = 0; b < f; ++b) {
    // W = R_{N E_b} N
    Eigen::VectorXd W = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) {
      if (N[i] == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        const double c1 = N[i] * st.E(j, b);
        if (c1 == 0.0) continue;
        for (int kk = 0; kk < n; ++kk) {
          const double c2 = c1 * N[kk];
          if (c2 == 0.0) continue;
          for (int l = 0; l < n; ++l) W[l] += c2 * pk.riemann[i][j](kk, l);
        }
      }
    }
    Eigen::VectorXd gW = pk.g * W;
    for (int a = 0; a < f; ++a) rc.R(a, b) = st.E.col(a).dot(gW);
  }
  rc.R = 0.5 * (rc.R + rc.R.transpose()).eval();
  rc.ricci_NN = N.dot(pk.ricci * N);
  return rc;
}

}  // namespace

RayCurvature FermiRay::curvature_at(double t) const {
  const long k = std::lround(t / step_);
  const bool on_node = k >= 0 && k < node_count() &&
                       std::abs(nodes_[static_cast<std::size_t>(k)].t - t) < 1e-12;
  if (on_node) {
    auto& slot = curvature_cache_[static_cast<std::size_t>(k)];
    if (!slot) slot = contract_curvature(*ambient_, nodes_[static_cast<std::size_t>(k)]);
    return *slot;
  }
  return contract_curvature(*ambient_, state_at(t));
}

PathRecord FermiRay::path() const {
  PathRecord rec;
  rec.t_max = t_max_;
  rec.max_step_error = max_step_error_;
  PathSegment seg;
  seg.chart = nodes_.front().chart;
  for (const RayState& st : nodes_) {
    if (st.chart != seg.chart) {
      ChartPoint back = ambient_->transfer_point({st.chart, st.x}, seg.chart);
      Eigen::VectorXd vb = ambient_->transfer_vector({st.chart, st.x}, st.v, seg.chart);
      seg.nodes.push_back(PathNode{st.t, back.x, vb});
      rec.segments.push_back(seg);
      seg = PathSegment{};
      seg.chart = st.chart;
    }
    seg.nodes.push_back(PathNode{st.t, st.x, st.v});
  }
  rec.segments.push_back(seg);
  return rec;
}

}  // namespace tubegeo
