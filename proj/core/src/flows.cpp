#include "tubegeo/flows.hpp"

#include <cmath>

namespace tubegeo {

namespace {

constexpr double kResidualStep = 5e-5;

ShapeSample assemble(double t, const Eigen::MatrixXd& S, ShapeMethod method) {
  ShapeSample s;
  s.t = t;
  s.S_bar = S;
  s.H = S.trace();
  s.eigenvalues = shape_eigenvalues(S);
  s.method = method;
  return s;
}

}  // namespace

// ---------------------------------------------------------------- RiccatiFlow

RiccatiFlow::RiccatiFlow(const FermiRay& ray, const ShapeSample& seed) : ray_(&ray) {
  t0_ = seed.t;
  grid_h_ = 2.0 * ray.step();
  // In the transported orthonormal frame the operator is symmetric; the
  // series block array differs from it by O(t) off-diagonal bookkeeping, so
  // the seed is symmetrized before integrating.
  Eigen::MatrixXd S = 0.5 * (seed.S_bar + seed.S_bar.transpose());

  grid_t_.push_back(t0_);
  grid_S_.push_back(S);
  long k = 0;
  double t = t0_;
  while (t < ray.t_max() - 1e-12) {
    const double t_next = std::min(ray.t_max(), t0_ + static_cast<double>(k + 1) * grid_h_);
    S = rk4(S, t, t_next - t);
    t = t_next;
    ++k;
    if (!S.allFinite() || S.cwiseAbs().maxCoeff() > kBlowupNorm) {
      focal_t_ = t;
      grid_t_.push_back(t);
      grid_S_.push_back(S);
      break;
    }
    grid_t_.push_back(t);
    grid_S_.push_back(S);
  }
}

Eigen::MatrixXd RiccatiFlow::rk4(const Eigen::MatrixXd& S, double t, double h) const {
  auto f = [&](const Eigen::MatrixXd& M, double tt) -> Eigen::MatrixXd {
    return M * M + ray_->curvature_at(tt).R;
  };
  // The fiber block behaves like -1/t near the seed; substeps bounded by
  // t/100 keep the local error of the steep region at the 1e-7 level. The
  // schedule depends only on (t, h), so runs stay deterministic.
  int n_sub = 1;
  if (h > 0 && t > 0) n_sub = static_cast<int>(std::ceil(100.0 * h / t));
  if (h < 0 && t + h > 0) n_sub = static_cast<int>(std::ceil(100.0 * -h / (t + h)));
  n_sub = std::min(std::max(n_sub, 1), 400);
  const double hs = h / n_sub;
  Eigen::MatrixXd M = S;
  double tt = t;
  for (int s = 0; s < n_sub; ++s) {
    Eigen::MatrixXd k1 = f(M, tt);
    Eigen::MatrixXd k2 = f(M + 0.5 * hs * k1, tt + 0.5 * hs);
    Eigen::MatrixXd k3 = f(M + 0.5 * hs * k2, tt + 0.5 * hs);
    Eigen::MatrixXd k4 = f(M + hs * k3, tt + hs);
    M += (hs / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    tt += hs;
    if (!M.allFinite()) return M;
  }
  return M;
}

Eigen::MatrixXd RiccatiFlow::eval(double t) const {
  if (t < t0_ - 1e-12) throw Error("RiccatiFlow: t below seed t0");
  if (focal_t_ && t > *focal_t_ - 1e-12)
    throw Error("RiccatiFlow: t beyond blow-up at t=" + std::to_string(*focal_t_));
  std::size_t k = static_cast<std::size_t>(std::floor((t - t0_) / grid_h_ + 1e-12));
  if (k >= grid_t_.size()) k = grid_t_.size() - 1;
  while (k > 0 && grid_t_[k] > t + 1e-12) --k;
  Eigen::MatrixXd S = grid_S_[k];
  double tt = grid_t_[k];
  while (tt < t - 1e-13) {
    const double h = std::min(grid_h_, t - tt);
    S = rk4(S, tt, h);
    tt += h;
  }
  return S;
}

ShapeSample RiccatiFlow::sample_at(double t) const {
  if (focal_t_ && t > *focal_t_ - 1e-12) {
    // Graceful truncation: last state before blow-up, flagged.
    ShapeSample s = assemble(*focal_t_, grid_S_.back(), ShapeMethod::riccati);
    s.focal_flag = true;
    s.ricci_NN = ray_->curvature_at(std::min(*focal_t_, ray_->t_max())).ricci_NN;
    return s;
  }
  Eigen::MatrixXd S = eval(t);
  ShapeSample s = assemble(t, S, ShapeMethod::riccati);

  const double d = std::min(kResidualStep, 0.5 * t);
  Eigen::MatrixXd Sp = rk4(S, t, d);
  Eigen::MatrixXd Sm = rk4(S, t, -d);
  Eigen::MatrixXd deriv = (Sp - Sm) / (2.0 * d);
  RayCurvature rc = ray_->curvature_at(t);
  s.riccati_residual = (deriv - S * S - rc.R).cwiseAbs().maxCoeff();
  s.H_prime = deriv.trace();
  s.ricci_NN = rc.ricci_NN;
  return s;
}

RiccatiRun integrate_riccati(const FermiRay& ray, const ShapeSample& seed,
                             const std::vector<double>& t_grid, const RiccatiOptions& opts) {
  RiccatiRun run;
  RiccatiFlow flow(ray, seed);
  run.focal_t = flow.focal_t();
  run.samples.reserve(t_grid.size());
  for (double t : t_grid) {
    run.samples.push_back(flow.sample_at(t));
    if (run.samples.back().focal_flag) break;
  }
  if (opts.check_t0_sensitivity) {
    const double t_ref = 0.5;
    if (t_ref > seed.t && t_ref < ray.t_max() && (!run.focal_t || t_ref < *run.focal_t)) {
      ShapeSample half_seed =
          series_seed(ray.patch(), ray.u(), ray.v_coeffs(), 0.5 * seed.t);
      RiccatiFlow flow_half(ray, half_seed);
      run.t0_sensitivity =
          (flow.eval(t_ref) - flow_half.eval(t_ref)).cwiseAbs().maxCoeff();
    }
  }
  return run;
}

// ----------------------------------------------------------------- JacobiFlow

JacobiFlow::JacobiFlow(const FermiRay& ray) : ray_(&ray) {
  grid_h_ = 2.0 * ray.step();
  const int n = ray.ambient().dim();
  const int m = ray.patch().m();
  const int f = n - 1;

  Eigen::MatrixXd Y = Eigen::MatrixXd::Zero(f, f);
  Y.topLeftCorner(m, m).setIdentity();
  Eigen::MatrixXd Yp = Eigen::MatrixXd::Zero(f, f);
  if (m > 0)
    Yp.topLeftCorner(m, m) = -shape_of_submanifold(ray.patch(), ray.u(), ray.v_coeffs());
  Yp.bottomRightCorner(f - m, f - m).setIdentity();

  grid_t_.push_back(0.0);
  grid_Y_.push_back(Y);
  grid_Yp_.push_back(Yp);
  long k = 0;
  double t = 0;
  while (t < ray.t_max() - 1e-12) {
    const double t_next = std::min(ray.t_max(), static_cast<double>(k + 1) * grid_h_);
    rk4(Y, Yp, t, t_next - t);
    t = t_next;
    ++k;
    grid_t_.push_back(t);
    grid_Y_.push_back(Y);
    grid_Yp_.push_back(Yp);
  }
}

void JacobiFlow::rk4(Eigen::MatrixXd& Y, Eigen::MatrixXd& Yp, double t, double h) const {
  auto acc = [&](const Eigen::MatrixXd& Ycur, double tt) -> Eigen::MatrixXd {
    return -(ray_->curvature_at(tt).R * Ycur);
  };
  Eigen::MatrixXd k1y = Yp, k1p = acc(Y, t);
  Eigen::MatrixXd k2y = Yp + 0.5 * h * k1p, k2p = acc(Y + 0.5 * h * k1y, t + 0.5 * h);
  Eigen::MatrixXd k3y = Yp + 0.5 * h * k2p, k3p = acc(Y + 0.5 * h * k2y, t + 0.5 * h);
  Eigen::MatrixXd k4y = Yp + h * k3p, k4p = acc(Y + h * k3y, t + h);
  Y += (h / 6.0) * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
  Yp += (h / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
}

std::pair<Eigen::MatrixXd, Eigen::MatrixXd> JacobiFlow::fundamental_at(double t) const {
  // Small overshoot is allowed for residual probes at the last sample.
  if (t < -1e-12 || t > ray_->t_max() + 5e-3)
    throw Error("JacobiFlow: t outside [0, t_max]");
  std::size_t k = static_cast<std::size_t>(std::floor(t / grid_h_ + 1e-12));
  if (k >= grid_t_.size()) k = grid_t_.size() - 1;
  while (k > 0 && grid_t_[k] > t + 1e-12) --k;
  Eigen::MatrixXd Y = grid_Y_[k], Yp = grid_Yp_[k];
  double tt = grid_t_[k];
  while (tt < t - 1e-13) {
    const double h = std::min(grid_h_, t - tt);
    rk4(Y, Yp, tt, h);
    tt += h;
  }
  return {Y, Yp};
}

Eigen::MatrixXd JacobiFlow::eval(double t) const {
  auto [Y, Yp] = fundamental_at(t);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(Y);
  lu.setThreshold(1e-10);
  if (!lu.isInvertible())
    throw SingularJacobian("JacobiFlow: Y(t) singular at t=" + std::to_string(t) +
                           " (focal point)");
  Eigen::MatrixXd S = -(Yp * lu.inverse());
  // Pivot thresholds cannot flag a uniformly shrinking Y (the 1x1 case is
  // always "full rank"); the operator norm is the focal-point signal.
  if (!S.allFinite() || S.cwiseAbs().maxCoeff() > RiccatiFlow::kBlowupNorm)
    throw SingularJacobian("JacobiFlow: shape operator blow-up at t=" + std::to_string(t) +
                           " (focal point)");
  return S;
}

ShapeSample JacobiFlow::sample_at(double t) const {
  Eigen::MatrixXd S = eval(t);
  ShapeSample s = assemble(t, S, ShapeMethod::jacobi);

  const double d = std::min(kResidualStep, 0.5 * t);
  auto [Y, Yp] = fundamental_at(t);
  Eigen::MatrixXd Ya = Y, Ypa = Yp, Yb = Y, Ypb = Yp;
  rk4(Ya, Ypa, t, d);
  rk4(Yb, Ypb, t, -d);
  Eigen::MatrixXd Sp = -(Ypa * Ya.inverse());
  Eigen::MatrixXd Sm = -(Ypb * Yb.inverse());
  Eigen::MatrixXd deriv = (Sp - Sm) / (2.0 * d);
  RayCurvature rc = ray_->curvature_at(t);
  s.riccati_residual = (deriv - S * S - rc.R).cwiseAbs().maxCoeff();
  s.H_prime = deriv.trace();
  s.ricci_NN = rc.ricci_NN;
  return s;
}

std::vector<ShapeSample> shape_via_jacobi(const FermiRay& ray, const std::vector<double>& t_grid) {
  JacobiFlow flow(ray);
  std::vector<ShapeSample> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) out.push_back(flow.sample_at(t));
  return out;
}

}  // namespace tubegeo
