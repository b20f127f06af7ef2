#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tubegeo/flows.hpp"

namespace tubegeo {

// Principal-curvature branches along a monotone t-grid, continued by
// nearest-neighbor (sorted-position) matching. A branch is fiber-type when it
// behaves like -1/t toward the submanifold, submanifold-type when it has a
// finite limit mu there.
struct BranchRecord {
  std::vector<double> t;
  // lambda[b][i]: branch b at t[i]; branches ordered descending at the first t.
  std::vector<std::vector<double>> lambda;
  std::vector<bool> fiber_type;
  std::vector<std::optional<double>> mu;  // Richardson limit, submanifold-type only
  bool ambiguity = false;                 // some branches closer than 1e-10; ties kept sorted
  std::vector<double> ambiguity_ts;
};

BranchRecord track_eigen_branches(const std::vector<ShapeSample>& samples);

struct MeanCurvatureProfile {
  std::vector<double> t, H, dH_residual;
  bool monotone = false;  // strictly increasing H over the grid
};

// Trace diagnostics from stored per-sample data: residual_i measures
// |H' - |S|_F^2 - Ricci(N,N)| against the Riccati trace identity.
MeanCurvatureProfile mean_curvature_profile(const std::vector<ShapeSample>& samples);

struct MinimalSearch {
  bool found = false;
  double t_star = 0;
  double H_at_star = 0;
  int zero_count = 0;   // sign changes of H over the scan grid
  bool monotone = false;
  std::string note;     // "NoZero" when H keeps its sign
};

// Bisection on H(t) over [t_lo, t_hi] along the flow's ray.
MinimalSearch find_minimal_hypersurface(const RiccatiFlow& flow, double t_lo, double t_hi,
                                        int scan_points = 200);

// Polynomial extrapolation of (ts, ys) to t = 0 (Neville).
double extrapolate_to_zero(const std::vector<double>& ts, const std::vector<double>& ys);

}  // namespace tubegeo
