#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "tubegeo/fermi.hpp"
#include "tubegeo/shape.hpp"

namespace tubegeo {

// Matrix Riccati flow S' = S^2 + R(t) along a ray, seeded at small t0 from
// the series expansion (the equation is singular at t = 0). States are cached
// on a grid aligned with the ray nodes; arbitrary t is reached by mini-steps
// from the nearest cached state.
class RiccatiFlow {
 public:
  static constexpr double kBlowupNorm = 1e6;

  RiccatiFlow(const FermiRay& ray, const ShapeSample& seed);

  const FermiRay& ray() const { return *ray_; }
  double t0() const { return t0_; }
  // First grid time where |S| passed the blow-up threshold, if any.
  std::optional<double> focal_t() const { return focal_t_; }

  // S_bar at t (t >= t0, below blow-up); BlowUp region raises Error-free
  // flagged samples via sample_at instead.
  Eigen::MatrixXd eval(double t) const;
  double mean_curvature(double t) const { return eval(t).trace(); }

  // Full sample with residual diagnostics.
  ShapeSample sample_at(double t) const;

 private:
  Eigen::MatrixXd rk4(const Eigen::MatrixXd& S, double t, double h) const;
  const FermiRay* ray_;
  double t0_, grid_h_;
  std::vector<double> grid_t_;
  std::vector<Eigen::MatrixXd> grid_S_;
  std::optional<double> focal_t_;
};

struct RiccatiRun {
  std::vector<ShapeSample> samples;
  std::optional<double> focal_t;
  // Max |S(0.5) drift| under rerunning with t0/2 (reported when requested and
  // 0.5 is inside the range).
  std::optional<double> t0_sensitivity;
};

struct RiccatiOptions {
  bool check_t0_sensitivity = false;
};

RiccatiRun integrate_riccati(const FermiRay& ray, const ShapeSample& seed,
                             const std::vector<double>& t_grid, const RiccatiOptions& opts = {});

// Tube shape operator from the Jacobi-field matrix: columns solve
// Y'' + R(t) Y = 0 with Y(0) = diag(I_m, 0), Y'(0) = diag(-T_v, I), and
// S_bar = -Y' Y^{-1}. Linear, regular at t = 0; the independent oracle for
// the Riccati route.
class JacobiFlow {
 public:
  explicit JacobiFlow(const FermiRay& ray);

  const FermiRay& ray() const { return *ray_; }
  // (Y, Y') at t.
  std::pair<Eigen::MatrixXd, Eigen::MatrixXd> fundamental_at(double t) const;
  Eigen::MatrixXd eval(double t) const;  // throws SingularJacobian at focal points
  ShapeSample sample_at(double t) const;

 private:
  void rk4(Eigen::MatrixXd& Y, Eigen::MatrixXd& Yp, double t, double h) const;
  const FermiRay* ray_;
  double grid_h_;
  std::vector<double> grid_t_;
  std::vector<Eigen::MatrixXd> grid_Y_, grid_Yp_;
};

std::vector<ShapeSample> shape_via_jacobi(const FermiRay& ray, const std::vector<double>& t_grid);

}  // namespace tubegeo
