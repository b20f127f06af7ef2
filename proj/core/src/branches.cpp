#include "tubegeo/branches.hpp"

#include <algorithm>
#include <cmath>

namespace tubegeo {

double extrapolate_to_zero(const std::vector<double>& ts, const std::vector<double>& ys) {
  std::vector<double> p = ys;
  const std::size_t n = ts.size();
  for (std::size_t lvl = 1; lvl < n; ++lvl)
    for (std::size_t i = 0; i + lvl < n; ++i)
      p[i] = ((0.0 - ts[i + lvl]) * p[i] + (ts[i] - 0.0) * p[i + 1]) / (ts[i] - ts[i + lvl]);
  return p[0];
}

BranchRecord track_eigen_branches(const std::vector<ShapeSample>& samples) {
  BranchRecord rec;
  if (samples.empty()) return rec;
  const int nb = static_cast<int>(samples.front().eigenvalues.size());
  rec.lambda.assign(static_cast<std::size_t>(nb), {});

  for (const ShapeSample& s : samples) {
    if (s.focal_flag) break;
    rec.t.push_back(s.t);
    // Sorted lists match sorted lists; flag near-ties as ambiguous.
    for (int b = 0; b + 1 < nb; ++b)
      if (std::abs(s.eigenvalues[b] - s.eigenvalues[b + 1]) < 1e-10) {
        rec.ambiguity = true;
        rec.ambiguity_ts.push_back(s.t);
        break;
      }
    for (int b = 0; b < nb; ++b) rec.lambda[static_cast<std::size_t>(b)].push_back(s.eigenvalues[b]);
  }
  if (rec.t.empty()) return rec;

  const double t_min = rec.t.front();
  const std::size_t k = std::min<std::size_t>(5, rec.t.size());
  for (int b = 0; b < nb; ++b) {
    const auto& lam = rec.lambda[static_cast<std::size_t>(b)];
    const bool fiber = lam.front() < -0.5 / t_min;
    rec.fiber_type.push_back(fiber);
    if (fiber) {
      rec.mu.emplace_back(std::nullopt);
    } else {
      std::vector<double> ts(rec.t.begin(), rec.t.begin() + static_cast<long>(k));
      std::vector<double> ys(lam.begin(), lam.begin() + static_cast<long>(k));
      rec.mu.emplace_back(extrapolate_to_zero(ts, ys));
    }
  }
  return rec;
}

MeanCurvatureProfile mean_curvature_profile(const std::vector<ShapeSample>& samples) {
  MeanCurvatureProfile prof;
  for (const ShapeSample& s : samples) {
    if (s.focal_flag) break;
    prof.t.push_back(s.t);
    prof.H.push_back(s.H);
    const double rhs = s.S_bar.squaredNorm() + s.ricci_NN;
    prof.dH_residual.push_back(std::abs(s.H_prime - rhs));
  }
  prof.monotone = true;
  for (std::size_t i = 0; i + 1 < prof.H.size(); ++i)
    if (prof.H[i + 1] <= prof.H[i]) prof.monotone = false;
  return prof;
}

MinimalSearch find_minimal_hypersurface(const RiccatiFlow& flow, double t_lo, double t_hi,
                                        int scan_points) {
  MinimalSearch out;
  t_lo = std::max(t_lo, flow.t0());
  if (flow.focal_t()) t_hi = std::min(t_hi, *flow.focal_t() - 10.0 * flow.ray().step());
  if (t_hi <= t_lo) {
    out.note = "empty range";
    return out;
  }

  std::vector<double> ts, Hs;
  for (int i = 0; i < scan_points; ++i) {
    const double t = t_lo + (t_hi - t_lo) * i / (scan_points - 1);
    ts.push_back(t);
    Hs.push_back(flow.mean_curvature(t));
  }
  out.monotone = true;
  for (std::size_t i = 0; i + 1 < Hs.size(); ++i)
    if (Hs[i + 1] <= Hs[i]) out.monotone = false;

  int first_change = -1;
  for (std::size_t i = 0; i + 1 < Hs.size(); ++i) {
    if ((Hs[i] < 0 && Hs[i + 1] >= 0) || (Hs[i] > 0 && Hs[i + 1] <= 0)) {
      ++out.zero_count;
      if (first_change < 0) first_change = static_cast<int>(i);
    }
  }
  if (out.zero_count == 0) {
    out.note = "NoZero";
    return out;
  }

  double a = ts[static_cast<std::size_t>(first_change)];
  double b = ts[static_cast<std::size_t>(first_change) + 1];
  double Ha = flow.mean_curvature(a);
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (a + b);
    const double Hm = flow.mean_curvature(mid);
    if (std::abs(Hm) < 1e-12 || (b - a) < 1e-13) {
      a = b = mid;
      break;
    }
    if ((Ha < 0) == (Hm < 0)) {
      a = mid;
      Ha = Hm;
    } else {
      b = mid;
    }
  }
  out.found = true;
  out.t_star = 0.5 * (a + b);
  out.H_at_star = flow.mean_curvature(out.t_star);
  return out;
}

}  // namespace tubegeo
