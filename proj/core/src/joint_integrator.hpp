#pragma once

// Internal: shared RK4 integrator for the geodesic system optionally coupled
// with frame transport. Not installed.

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "tubegeo/chart.hpp"

namespace tubegeo::detail {

struct JointState {
  int chart = 0;
  Eigen::VectorXd x, v;
  Eigen::MatrixXd E;  // n x k transported vectors (k may be 0)
};

struct JointNodes {
  std::vector<double> t;
  std::vector<JointState> s;
  double max_err = 0;
};

// Single RK4 step over h in the state's current chart (no transfer, no error
// estimate). Used for node-to-query refinement.
JointState joint_step(const ChartedManifold& M, const JointState& s, double h);

// Fixed-step integration with two half-steps per recorded node and a
// full-step comparison as local error estimate; switches charts at nodes.
// step_tol guards against dynamics the fixed step cannot resolve.
JointNodes integrate_joint(const ChartedManifold& M, const JointState& s0, double t_max,
                           double step, double step_tol = 1e-8);

}  // namespace tubegeo::detail
