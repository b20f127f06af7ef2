#pragma once

#include <Eigen/Dense>
#include <memory>
#include <optional>
#include <vector>

#include "tubegeo/curvature.hpp"
#include "tubegeo/geodesic.hpp"
#include "tubegeo/submanifold.hpp"

namespace tubegeo {

// Position, velocity and transported frame at one ray parameter.
struct RayState {
  double t = 0;
  int chart = 0;
  Eigen::VectorXd x, v;
  Eigen::MatrixXd E;  // n x (n-1), g-orthonormal, orthogonal to v; v is the last frame vector
};

// Curvature data contracted into the transported frame.
struct RayCurvature {
  Eigen::MatrixXd R;  // (n-1)x(n-1), R(a,b) = <R_{N E_b} N, E_a>, symmetric
  double ricci_NN = 0;
};

// One normal geodesic eta_v(t) = exp_p(t v) from a submanifold patch, with
// the g-orthonormal frame (orthonormalized tangent frame, normal complement
// of v, then eta' last) parallel-transported along it. The frame columns and
// all tube shape operators downstream are expressed in this frame, which is
// chart-independent across mid-ray chart switches.
class FermiRay {
 public:
  const SubmanifoldPatch& patch() const { return *patch_; }
  const ChartedManifold& ambient() const { return *ambient_; }
  const Eigen::VectorXd& u() const { return u_; }
  const Eigen::VectorXd& v_coeffs() const { return v_coeffs_; }
  const BaseFrames& base() const { return base_; }
  double t_max() const { return t_max_; }
  double step() const { return step_; }
  double max_step_error() const { return max_step_error_; }

  RayState state_at(double t) const;
  // Frame-contracted curvature at t; node-aligned evaluations are cached.
  RayCurvature curvature_at(double t) const;

  PathRecord path() const;

  // Node grid: times 0, step, 2*step, ..., t_max (final node possibly partial).
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const RayState& node(int k) const { return nodes_[static_cast<std::size_t>(k)]; }

 private:
  friend FermiRay normal_frame_ray(PatchPtr P, const Eigen::VectorXd& u,
                                   const Eigen::VectorXd& v_coeffs, double t_max, double step);

  PatchPtr patch_;
  ManifoldPtr ambient_;
  Eigen::VectorXd u_, v_coeffs_;
  BaseFrames base_;
  // Nodes run slightly past t_max so residual probes at the last sample stay
  // on integrated ground.
  double t_max_ = 0, t_pad_ = 0, step_ = 0, max_step_error_ = 0;
  std::vector<RayState> nodes_;
  // Lazy per-node cache; rays are used by one worker at a time.
  mutable std::vector<std::optional<RayCurvature>> curvature_cache_;
};

FermiRay normal_frame_ray(PatchPtr P, const Eigen::VectorXd& u, const Eigen::VectorXd& v_coeffs,
                          double t_max, double step);

}  // namespace tubegeo
