#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tubegeo/chart.hpp"

namespace tubegeo {

struct PathNode {
  double t;
  Eigen::VectorXd x, v;
};

// One chart per segment; a chart switch ends a segment and starts the next at
// the same parameter value with transferred coordinates.
struct PathSegment {
  int chart = 0;
  std::vector<PathNode> nodes;
};

struct PathRecord {
  std::vector<PathSegment> segments;
  double t_max = 0;
  double max_step_error = 0;  // halving-based local error estimate, max over steps

  const PathNode& first() const { return segments.front().nodes.front(); }
  const PathNode& last() const { return segments.back().nodes.back(); }
  int last_chart() const { return segments.back().chart; }
  std::size_t node_count() const;
};

// Unit-speed geodesic from p in direction w, fixed-step RK4 (two half-steps
// per recorded node; the full-step/half-step discrepancy is the error
// estimate). Charts switch when the coordinate norm passes the switch radius.
PathRecord integrate_geodesic(const ChartedManifold& M, const ChartPoint& p,
                              const Eigen::VectorXd& w, double t_max, double step);

// Parallel transport of frame0 (columns) along an arbitrary dense path; stage
// positions inside a node interval come from cubic Hermite interpolation.
// Returns one frame per node, flattened across segments in order.
std::vector<Eigen::MatrixXd> parallel_transport_frame(const ChartedManifold& M,
                                                      const PathRecord& path,
                                                      const Eigen::MatrixXd& frame0);

}  // namespace tubegeo
