#include "tubegeo/verify.hpp"

#include <algorithm>
#include <cmath>

#include "tubegeo/curvature.hpp"
#include "tubegeo/jets.hpp"
#include "tubegeo/parallel.hpp"

namespace tubegeo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct SamplePlan {
  std::vector<Eigen::VectorXd> bases;  // parameter points u
  std::vector<Eigen::VectorXd> dirs;   // unit normal coefficient vectors
};

SamplePlan plan_samples(const SubmanifoldPatch& P, int n_base, int n_dirs, std::uint64_t seed) {
  SamplePlan plan;
  const int m = P.m();
  const int c = P.codim();
  if (m == 0) {
    plan.bases.push_back(Eigen::VectorXd(0));
  } else {
    for (int i = 0; i < n_base; ++i)
      plan.bases.push_back(P.domain().lerp(halton_point(static_cast<std::uint64_t>(i), m, seed)));
  }
  const int want = (c == 1) ? std::min(n_dirs, 2) : n_dirs;
  plan.dirs = unit_sphere_points(c, want, seed + 1);
  return plan;
}

double resolve_t_max(const CatalogEntry& e, const SuiteConfig& cfg) {
  return cfg.t_max.value_or(e.default_t_max);
}

Provenance make_prov(const CatalogEntry& e, const SuiteConfig& cfg) {
  Provenance p;
  p.seed = cfg.seed;
  p.t0 = cfg.t0;
  p.step = cfg.step;
  p.base = cfg.base;
  p.dirs = cfg.dirs;
  p.t_steps = cfg.t_steps;
  p.t_min = cfg.t_min;
  p.t_max = resolve_t_max(e, cfg);
  p.gate_note = e.gate_note;
  return p;
}

VerificationReport make_report(const CatalogEntry& e, const std::string& suite,
                               const SuiteConfig& cfg) {
  VerificationReport r;
  r.case_label = e.label;
  r.suite = suite;
  r.prov = make_prov(e, cfg);
  return r;
}

const IsoparametricCandidate& require_candidate(const CatalogEntry& e, const std::string& suite) {
  if (!e.candidate)
    throw UsageError(suite + ": case " + e.label + " has no isoparametric candidate");
  return *e.candidate;
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v;
  if (n == 1) {
    v.push_back(a);
    return v;
  }
  for (int i = 0; i < n; ++i) v.push_back(a + (b - a) * i / (n - 1));
  return v;
}

std::vector<double> logspace(double a, double b, int n) {
  std::vector<double> v = linspace(std::log(a), std::log(b), n);
  for (double& x : v) x = std::exp(x);
  return v;
}

// |grad f|^2_g and Laplace-Beltrami of the candidate field at a point.
struct FieldEval {
  double f, grad2, lap;
};

FieldEval eval_field(const ChartedManifold& M, const ScalarFn& f, const ChartPoint& p) {
  ScalarJet jet = scalar_jet(f, p.chart, p.x);
  Eigen::MatrixXd g = metric_at(M, p);
  Eigen::MatrixXd ginv = g.llt().solve(Eigen::MatrixXd::Identity(M.dim(), M.dim()));
  std::vector<Eigen::MatrixXd> gam = christoffel_at(M, p);
  FieldEval out;
  out.f = jet.f;
  out.grad2 = jet.grad.dot(ginv * jet.grad);
  double lap = 0;
  for (int i = 0; i < M.dim(); ++i)
    for (int j = 0; j < M.dim(); ++j) {
      double corr = 0;
      for (int k = 0; k < M.dim(); ++k) corr += gam[k](i, j) * jet.grad[k];
      lap += ginv(i, j) * (jet.hess(i, j) - corr);
    }
  out.lap = lap;
  return out;
}

// Binned profile of `value` against f with a local quadratic fit per bin;
// the spread statistic is the worst relative residual about the fit. (A
// nonconstant profile varies across a bin far above tolerance, so raw
// within-bin spread would not distinguish signal from functional dependence.)
struct BinnedProfile {
  std::vector<ProfileBin> bins;
  double worst_rel_residual = 0;
  int worst_bin = -1;
};

BinnedProfile bin_profile(const std::vector<double>& fs, const std::vector<double>& values,
                          int n_bins) {
  BinnedProfile out;
  const double f_lo = *std::min_element(fs.begin(), fs.end());
  const double f_hi = *std::max_element(fs.begin(), fs.end());
  const double width = (f_hi - f_lo) / n_bins;
  std::vector<std::vector<std::size_t>> members(static_cast<std::size_t>(n_bins));
  for (std::size_t i = 0; i < fs.size(); ++i) {
    int b = static_cast<int>((fs[i] - f_lo) / width);
    b = std::clamp(b, 0, n_bins - 1);
    members[static_cast<std::size_t>(b)].push_back(i);
  }
  for (int b = 0; b < n_bins; ++b) {
    const auto& idx = members[static_cast<std::size_t>(b)];
    ProfileBin bin;
    bin.f_center = f_lo + (b + 0.5) * width;
    bin.count = static_cast<int>(idx.size());
    if (idx.size() >= 8) {
      Eigen::MatrixXd Amat(idx.size(), 3);
      Eigen::VectorXd rhs(idx.size());
      for (std::size_t r = 0; r < idx.size(); ++r) {
        const double df = fs[idx[r]] - bin.f_center;
        Amat(static_cast<long>(r), 0) = 1.0;
        Amat(static_cast<long>(r), 1) = df;
        Amat(static_cast<long>(r), 2) = df * df;
        rhs[static_cast<long>(r)] = values[idx[r]];
      }
      Eigen::Vector3d coef =
          (Amat.transpose() * Amat).ldlt().solve(Amat.transpose() * rhs);
      bin.value = coef[0];
      double scale = 0, resid = 0;
      for (std::size_t r = 0; r < idx.size(); ++r) {
        const double df = fs[idx[r]] - bin.f_center;
        const double fit = coef[0] + coef[1] * df + coef[2] * df * df;
        resid = std::max(resid, std::abs(values[idx[r]] - fit));
        scale = std::max(scale, std::abs(values[idx[r]]));
      }
      bin.residual = resid / std::max(scale, 1e-300);
      if (bin.residual > out.worst_rel_residual) {
        out.worst_rel_residual = bin.residual;
        out.worst_bin = b;
      }
    }
    out.bins.push_back(bin);
  }
  return out;
}

VerificationReport profile_suite(const CatalogEntry& e, const SuiteConfig& cfg, bool laplacian) {
  const char* suite = laplacian ? "isoparametric" : "transnormal";
  const IsoparametricCandidate& cand = require_candidate(e, suite);
  VerificationReport rep = make_report(e, suite, cfg);

  const int n_samples = std::max(cfg.n_samples, 100);
  const double margin = 0.05 * (cand.f_max - cand.f_min);
  Rng rng(cfg.seed);
  std::vector<ChartPoint> pts;
  pts.reserve(static_cast<std::size_t>(n_samples));
  int guard = 0;
  while (static_cast<int>(pts.size()) < n_samples && guard < 50 * n_samples) {
    ++guard;
    ChartPoint p = cand.sample_point(rng);
    const double f = cand.f.s0(p.chart, [&] {
      Vec<double> x(e.ambient->dim());
      for (int i = 0; i < e.ambient->dim(); ++i) x[i] = p.x[i];
      return x;
    }());
    if (f > cand.f_min + margin && f < cand.f_max - margin) pts.push_back(p);
  }

  std::vector<double> fs(pts.size()), vals(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) {
    FieldEval fe = eval_field(*e.ambient, cand.f, pts[i]);
    fs[i] = fe.f;
    vals[i] = laplacian ? fe.lap : fe.grad2;
  });

  BinnedProfile prof = bin_profile(fs, vals, 64);
  rep.profile = prof.bins;
  const double tol = cfg.tol.value_or(1e-6);
  rep.add(laplacian ? "a-profile max within-bin relative spread"
                    : "b-profile max within-bin relative spread",
          prof.worst_rel_residual, tol,
          prof.worst_bin >= 0 ? "worst bin " + std::to_string(prof.worst_bin) : "");
  if (!rep.statistics.back().pass) rep.note = "SpreadViolation";
  rep.add_info("samples used", static_cast<double>(pts.size()));
  return rep;
}

}  // namespace

void VerificationReport::add(const std::string& name, double value, double tolerance,
                             const std::string& note_) {
  Statistic s;
  s.name = name;
  s.value = value;
  s.tolerance = tolerance;
  s.pass = value < tolerance;
  s.note = note_;
  pass = pass && s.pass;
  statistics.push_back(std::move(s));
}

void VerificationReport::add_info(const std::string& name, double value,
                                  const std::string& note_) {
  Statistic s;
  s.name = name;
  s.value = value;
  s.tolerance = -1;
  s.pass = true;
  s.note = note_;
  statistics.push_back(std::move(s));
}

double gamma_p(const SubmanifoldPatch& P, const Eigen::VectorXd& u,
               const Eigen::VectorXd& v_coeffs) {
  BaseFrames f = base_frames(P, u, v_coeffs);
  CurvaturePacket pk = riemann_at(*P.ambient(), f.p);
  double sum_sec = 0;
  for (int a = 0; a < P.m(); ++a) sum_sec += pk.sectional(f.v, f.tangent.col(a));
  double t_norm2 = 0;
  if (P.m() > 0) {
    Eigen::MatrixXd T = shape_of_submanifold(P, u, v_coeffs);
    t_norm2 = T.squaredNorm();
  }
  return (f.v.dot(pk.ricci * f.v) + 2.0 * sum_sec + 3.0 * t_norm2) / 3.0;
}

VerificationReport check_transnormal(const CatalogEntry& e, const SuiteConfig& cfg) {
  return profile_suite(e, cfg, false);
}

VerificationReport check_isoparametric(const CatalogEntry& e, const SuiteConfig& cfg) {
  return profile_suite(e, cfg, true);
}

VerificationReport check_cartan_gate(const CatalogEntry& e, const SuiteConfig& cfg) {
  VerificationReport rep = make_report(e, "cartan-munzner", cfg);
  if (!e.candidate || !e.candidate->cm_polynomial) {
    throw UsageError("cartan-munzner: case " + e.label + " has no polynomial form");
  }
  CartanGateResult gate = verify_cartan_munzner(*e.candidate->cm_polynomial,
                                                e.candidate->cm_degree, 1000, cfg.seed);
  const double tol = cfg.tol.value_or(1e-10);
  rep.add("|grad F|^2 - g^2 |x|^(2g-2) residual", gate.grad_residual, tol);
  rep.add("Delta F - c |x|^(g-2) residual", gate.lap_residual, tol);
  rep.add_info("fitted c", gate.fitted_c);
  if (!rep.pass) rep.note = "IdentityViolation: catalog entry rejected";
  return rep;
}

namespace {

void minimal_focal_side(PatchPtr patch, const std::string& side,
                        const SuiteConfig& cfg, VerificationReport& rep) {
  const double tol_trace = cfg.tol.value_or(1e-6);
  if (patch->m() == 0) {
    rep.add("max |Trace T_v| (" + side + ")", 0.0, tol_trace, "vacuous (m=0 focal point)");
  } else {
    SamplePlan plan = plan_samples(*patch, cfg.base, cfg.dirs, cfg.seed);
    const std::size_t total = plan.bases.size() * plan.dirs.size();
    std::vector<double> traces(total);
    parallel_for(total, [&](std::size_t i) {
      const auto& u = plan.bases[i / plan.dirs.size()];
      const auto& v = plan.dirs[i % plan.dirs.size()];
      traces[i] = std::abs(shape_of_submanifold(*patch, u, v).trace());
    });
    rep.add("max |Trace T_v| (" + side + ")", *std::max_element(traces.begin(), traces.end()),
            tol_trace, std::to_string(total) + " samples");
  }

  // Full content of the trace identity: the tube mean curvature at a fixed
  // small t is one number across all base points and normal directions.
  SamplePlan plan = plan_samples(*patch, std::min(cfg.base, 16), std::min(cfg.dirs, 8), cfg.seed);
  const std::size_t total = plan.bases.size() * plan.dirs.size();
  const double t_fix = cfg.t_min;
  std::vector<double> hs(total);
  parallel_for(total, [&](std::size_t i) {
    const auto& u = plan.bases[i / plan.dirs.size()];
    const auto& v = plan.dirs[i % plan.dirs.size()];
    FermiRay ray = normal_frame_ray(patch, u, v, t_fix + 0.05, cfg.step);
    ShapeSample seed = series_seed(*patch, u, v, cfg.t0);
    RiccatiFlow flow(ray, seed);
    hs[i] = flow.mean_curvature(t_fix);
  });
  const double spread = *std::max_element(hs.begin(), hs.end()) -
                        *std::min_element(hs.begin(), hs.end());
  rep.add("H(t=" + std::to_string(t_fix) + ") spread (" + side + ")", spread, 1e-5,
          std::to_string(total) + " rays");
}

}  // namespace

VerificationReport verify_minimal_focal(const CatalogEntry& e, const SuiteConfig& cfg) {
  const IsoparametricCandidate& cand = require_candidate(e, "minimal-focal");
  VerificationReport rep = make_report(e, "minimal-focal", cfg);
  minimal_focal_side(cand.focal_minus, "M-", cfg, rep);
  minimal_focal_side(cand.focal_plus, "M+", cfg, rep);
  if (cand.focal_minus->m() == 0 && cand.focal_plus->m() == 0)
    rep.note = "vacuous: both focal varieties are points";
  return rep;
}

VerificationReport verify_austere_patch(PatchPtr patch, const SuiteConfig& cfg) {
  VerificationReport rep;
  rep.case_label = patch->label();
  rep.suite = "austere";
  rep.prov.seed = cfg.seed;
  const int m = patch->m();
  const double tol = cfg.tol.value_or(1e-6);
  if (m == 0) {
    rep.add("eigenvalue spread", 0.0, tol, "vacuous (m=0)");
    return rep;
  }

  SamplePlan plan = plan_samples(*patch, cfg.base, cfg.dirs, cfg.seed);
  const std::size_t total = plan.bases.size() * plan.dirs.size();
  std::vector<Eigen::VectorXd> spectra(total);
  parallel_for(total, [&](std::size_t i) {
    const auto& u = plan.bases[i / plan.dirs.size()];
    const auto& v = plan.dirs[i % plan.dirs.size()];
    spectra[i] = shape_eigenvalues(shape_of_submanifold(*patch, u, v));
  });

  double spread = 0;
  for (int pos = 0; pos < m; ++pos) {
    double lo = kInf, hi = -kInf;
    for (const auto& s : spectra) {
      lo = std::min(lo, s[pos]);
      hi = std::max(hi, s[pos]);
    }
    spread = std::max(spread, hi - lo);
  }
  rep.add("eigenvalue spread per sorted position", spread, tol,
          std::to_string(total) + " samples");

  // Each sample's sorted multiset must equal its own negation reversed.
  double pairing = 0;
  for (const auto& s : spectra)
    for (int i = 0; i < m; ++i) pairing = std::max(pairing, std::abs(s[i] + s[m - 1 - i]));
  rep.add("pairing residual (multiset = -multiset)", pairing, tol);
  return rep;
}

namespace {

void austere_limits_side(PatchPtr patch, const std::string& side, const SuiteConfig& cfg,
                         double t_max_entry, VerificationReport& rep) {
  if (patch->m() == 0) return;
  // Limit consistency: Richardson limits of tube eigenvalue branches against
  // the eigenvalues of T_v.
  SamplePlan plan = plan_samples(*patch, 2, 2, cfg.seed + 7);
  // The series seed carries an O(t0^2) truncation that passes straight into
  // the extrapolated limits, so this check seeds closer than the default t0.
  const double t0_lim = std::min(cfg.t0, 1e-3);
  double worst = 0;
  for (const auto& u : plan.bases) {
    for (const auto& v : plan.dirs) {
      const double t_hi = std::min(0.05, t_max_entry);
      FermiRay ray = normal_frame_ray(patch, u, v, t_hi + 0.02, cfg.step);
      ShapeSample seed = series_seed(*patch, u, v, t0_lim);
      std::vector<double> grid = linspace(t0_lim + 0.004, t_hi, 10);
      RiccatiRun run = integrate_riccati(ray, seed, grid);
      BranchRecord rec = track_eigen_branches(run.samples);
      std::vector<double> mus;
      for (const auto& mu : rec.mu)
        if (mu) mus.push_back(*mu);
      Eigen::VectorXd tv = shape_eigenvalues(shape_of_submanifold(*patch, u, v));
      std::sort(mus.begin(), mus.end(), std::greater<double>());
      if (static_cast<int>(mus.size()) != tv.size()) {
        worst = kInf;
        continue;
      }
      for (int i = 0; i < tv.size(); ++i) worst = std::max(worst, std::abs(mus[i] - tv[i]));
    }
  }
  rep.add("branch limits vs T_v eigenvalues (" + side + ")", worst, 1e-5);
}

}  // namespace

VerificationReport verify_austere(const CatalogEntry& e, const SuiteConfig& cfg) {
  const IsoparametricCandidate& cand = require_candidate(e, "austere");
  VerificationReport rep = make_report(e, "austere", cfg);
  if (!e.constant_principal_curvatures)
    rep.note = "case not flagged constant-principal-curvature";

  for (const auto& [patch, side] :
       {std::pair<PatchPtr, const char*>{cand.focal_minus, "M-"},
        std::pair<PatchPtr, const char*>{cand.focal_plus, "M+"}}) {
    VerificationReport sub = verify_austere_patch(patch, cfg);
    for (auto& st : sub.statistics) {
      st.name += std::string(" (") + side + ")";
      rep.pass = rep.pass && st.pass;
      rep.statistics.push_back(st);
    }
    austere_limits_side(patch, side, cfg, e.default_t_max, rep);
  }
  return rep;
}

namespace {

// Ordered-pair sectional curvature sums of the full adapted frame at a base
// point: (1/3) sum_{i!=j} K_ij + sum_{a!=b} K_ab + sum_{i,a} K_ia - R^P.
double eq7_lhs(const SubmanifoldPatch& P, const Eigen::VectorXd& u) {
  ChartPoint p = P.point_at(u);
  Eigen::MatrixXd g = metric_at(*P.ambient(), p);
  const int m = P.m();
  Eigen::MatrixXd tan =
      m > 0 ? orthonormalize(g, P.tangent_frame(u)) : Eigen::MatrixXd(P.ambient_dim(), 0);
  Eigen::MatrixXd nor = P.normal_frame(u);
  CurvaturePacket pk = riemann_at(*P.ambient(), p);

  double sum_nn = 0, sum_tt = 0, sum_nt = 0;
  for (int i = 0; i < nor.cols(); ++i)
    for (int j = 0; j < nor.cols(); ++j)
      if (i != j) sum_nn += pk.sectional(nor.col(i), nor.col(j));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (a != b) sum_tt += pk.sectional(tan.col(a), tan.col(b));
  for (int i = 0; i < nor.cols(); ++i)
    for (int a = 0; a < m; ++a) sum_nt += pk.sectional(nor.col(i), tan.col(a));

  double r_p = 0;
  if (m >= 2) r_p = riemann_at(*P.intrinsic(), ChartPoint{0, u}).scalar;
  return sum_nn / 3.0 + sum_tt + sum_nt - r_p;
}

void curvature_identities_side(PatchPtr patch, const std::string& side,
                               const SuiteConfig& cfg, VerificationReport& rep) {
  const int m = patch->m();
  const int n = patch->ambient_dim();
  SamplePlan plan = plan_samples(*patch, std::min(cfg.base, 12), std::min(cfg.dirs, 8), cfg.seed);
  const std::size_t total = plan.bases.size() * plan.dirs.size();

  // (i) Gamma_P constancy over (u, v).
  std::vector<double> gammas(total);
  parallel_for(total, [&](std::size_t i) {
    gammas[i] = gamma_p(*patch, plan.bases[i / plan.dirs.size()], plan.dirs[i % plan.dirs.size()]);
  });
  const double gamma_spread = *std::max_element(gammas.begin(), gammas.end()) -
                              *std::min_element(gammas.begin(), gammas.end());
  rep.add("Gamma_P spread (" + side + ")", gamma_spread, cfg.tol.value_or(1e-6));

  // (ii) Trace of the identity over v: curvature sums = (n-m) Gamma_P.
  double eq7_worst = 0;
  for (std::size_t b = 0; b < plan.bases.size(); ++b) {
    const double lhs = eq7_lhs(*patch, plan.bases[b]);
    const double rhs = (n - m) * gammas[b * plan.dirs.size()];
    eq7_worst = std::max(eq7_worst, std::abs(lhs - rhs));
  }
  rep.add("curvature-sum identity residual (" + side + ")", eq7_worst, 1e-5);

  // (iv) sum_a K(v, X_a) constancy.
  if (m >= 1) {
    std::vector<double> ksums(total);
    parallel_for(total, [&](std::size_t i) {
      const auto& u = plan.bases[i / plan.dirs.size()];
      const auto& v = plan.dirs[i % plan.dirs.size()];
      BaseFrames f = base_frames(*patch, u, v);
      CurvaturePacket pk = riemann_at(*patch->ambient(), f.p);
      double s = 0;
      for (int a = 0; a < m; ++a) s += pk.sectional(f.v, f.tangent.col(a));
      ksums[i] = s;
    });
    rep.add("sum_a K(v, X_a) spread (" + side + ")",
            *std::max_element(ksums.begin(), ksums.end()) -
                *std::min_element(ksums.begin(), ksums.end()),
            1e-6);
  }

  // Intrinsic scalar curvature constancy on the focal variety (the scalar
  // curvature of the ambient catalog spheres is constant, so their focal
  // varieties must inherit constant R^P).
  if (m >= 2) {
    std::vector<double> rps(plan.bases.size());
    parallel_for(plan.bases.size(), [&](std::size_t b) {
      rps[b] = riemann_at(*patch->intrinsic(), ChartPoint{0, plan.bases[b]}).scalar;
    });
    rep.add("R^P spread (" + side + ")",
            *std::max_element(rps.begin(), rps.end()) -
                *std::min_element(rps.begin(), rps.end()),
            1e-6);
  }

  // (v) Ricci(v,v) constancy on the focal normal directions.
  std::vector<double> riccis(total);
  parallel_for(total, [&](std::size_t i) {
    const auto& u = plan.bases[i / plan.dirs.size()];
    const auto& v = plan.dirs[i % plan.dirs.size()];
    BaseFrames f = base_frames(*patch, u, v);
    CurvaturePacket pk = riemann_at(*patch->ambient(), f.p);
    riccis[i] = f.v.dot(pk.ricci * f.v);
  });
  rep.add("Ricci(v,v) spread on focal normals (" + side + ")",
          *std::max_element(riccis.begin(), riccis.end()) -
              *std::min_element(riccis.begin(), riccis.end()),
          1e-6);
}

}  // namespace

VerificationReport verify_curvature_identities(const CatalogEntry& e, const SuiteConfig& cfg) {
  const IsoparametricCandidate& cand = require_candidate(e, "curvature-identities");
  VerificationReport rep = make_report(e, "curvature-identities", cfg);
  curvature_identities_side(cand.focal_minus, "M-", cfg, rep);
  curvature_identities_side(cand.focal_plus, "M+", cfg, rep);

  // Non-proper reduction: R^N - Ricci(nu,nu) - R^P = Gamma_P on the
  // codimension-1 focal variety, both orientations of nu.
  if (!cand.proper) {
    PatchPtr P = cand.focal_minus->codim() == 1 ? cand.focal_minus : cand.focal_plus;
    SamplePlan plan = plan_samples(*P, std::min(cfg.base, 12), 2, cfg.seed + 3);
    double worst = 0, rp_lo = kInf, rp_hi = -kInf;
    for (const auto& u : plan.bases) {
      for (const auto& nu : plan.dirs) {
        BaseFrames f = base_frames(*P, u, nu);
        CurvaturePacket pk = riemann_at(*P->ambient(), f.p);
        const double rn = pk.scalar;
        const double ricci_nn = f.v.dot(pk.ricci * f.v);
        double rp = 0;
        if (P->m() >= 2) rp = riemann_at(*P->intrinsic(), ChartPoint{0, u}).scalar;
        rp_lo = std::min(rp_lo, rp);
        rp_hi = std::max(rp_hi, rp);
        const double gamma = gamma_p(*P, u, nu);
        worst = std::max(worst, std::abs(rn - ricci_nn - rp - gamma));
      }
    }
    rep.add("non-proper reduction residual (both orientations)", worst, 1e-5);
    rep.add("R^P spread on non-proper focal variety", rp_hi - rp_lo, 1e-6);
  }

  // Ricci(N,N) constancy on tubes around the profile patch.
  {
    PatchPtr P = e.patches.front();
    SamplePlan plan = plan_samples(*P, 4, 4, cfg.seed + 11);
    const double t_max = resolve_t_max(e, cfg);
    for (double frac : {0.35, 0.7}) {
      const double t = frac * t_max;
      std::vector<double> vals;
      for (const auto& u : plan.bases)
        for (const auto& v : plan.dirs) {
          FermiRay ray = normal_frame_ray(P, u, v, t + 0.02, cfg.step);
          vals.push_back(ray.curvature_at(t).ricci_NN);
        }
      rep.add("Ricci(N,N) spread on tube t=" + std::to_string(t),
              *std::max_element(vals.begin(), vals.end()) -
                  *std::min_element(vals.begin(), vals.end()),
              1e-6);
    }
  }
  return rep;
}

VerificationReport verify_unique_minimal(const CatalogEntry& e, const SuiteConfig& cfg) {
  VerificationReport rep = make_report(e, "unique-minimal", cfg);
  PatchPtr P = e.patches.front();
  const double t_max = resolve_t_max(e, cfg);
  SamplePlan plan = plan_samples(*P, 2, 2, cfg.seed + 5);

  bool all_found = true, all_single = true, all_monotone = true;
  double worst_h = 0;
  std::vector<double> t_stars;
  for (const auto& u : plan.bases) {
    for (const auto& v : plan.dirs) {
      FermiRay ray = normal_frame_ray(P, u, v, t_max, cfg.step);
      ShapeSample seed = series_seed(*P, u, v, cfg.t0);
      RiccatiFlow flow(ray, seed);
      MinimalSearch ms = find_minimal_hypersurface(flow, cfg.t_min, t_max);
      all_found = all_found && ms.found;
      all_single = all_single && (ms.zero_count == 1);
      all_monotone = all_monotone && ms.monotone;
      if (ms.found) {
        worst_h = std::max(worst_h, std::abs(ms.H_at_star));
        t_stars.push_back(ms.t_star);
      } else if (rep.note.empty()) {
        rep.note = ms.note;
      }
    }
  }

  // Non-proper families have no minimal regular level: the codimension-1
  // focal variety itself is the minimal member, and H keeps one sign along
  // every tube ray. NoZero is the expected outcome there.
  if (e.candidate && !e.candidate->proper) {
    rep.add("H zero count (non-proper: expect none)", all_found ? 1.0 : 0.0, 0.5,
            "minimal hypersurface is the focal variety itself");
    if (e.positive_ricci)
      rep.add("H monotone (positive Ricci)", all_monotone ? 0.0 : 1.0, 0.5);
    rep.note = rep.note.empty() ? "non-proper family" : rep.note + "; non-proper family";
    return rep;
  }

  rep.add("H zero count deviation from 1", all_found && all_single ? 0.0 : 1.0, 0.5,
          all_found ? "" : "NoZero on some ray");
  if (e.positive_ricci)
    rep.add("H monotone (positive Ricci)", all_monotone ? 0.0 : 1.0, 0.5);
  if (!t_stars.empty()) {
    rep.add("|H(t*)|", worst_h, 1e-8);
    rep.add_info("t* (first ray)", t_stars.front());
    rep.add("t* spread across rays", *std::max_element(t_stars.begin(), t_stars.end()) -
                                         *std::min_element(t_stars.begin(), t_stars.end()),
            1e-6);
  }
  return rep;
}

TubeProfileResult tube_profile(const CatalogEntry& e, const SuiteConfig& cfg) {
  PatchPtr P = e.patches.front();
  const double t_max = resolve_t_max(e, cfg);
  const Eigen::VectorXd u =
      P->m() > 0 ? Eigen::VectorXd(0.5 * (P->domain().lo + P->domain().hi)) : Eigen::VectorXd(0);
  const Eigen::VectorXd v = unit_sphere_points(P->codim(), 1, cfg.seed).front();

  FermiRay ray = normal_frame_ray(P, u, v, t_max, cfg.step);
  ShapeSample seed = series_seed(*P, u, v, cfg.t0);
  RiccatiOptions opts;
  opts.check_t0_sensitivity = true;
  RiccatiRun run =
      integrate_riccati(ray, seed, linspace(cfg.t_min, t_max, cfg.t_steps), opts);
  TubeProfileResult out;
  out.samples = std::move(run.samples);
  out.focal_t = run.focal_t;
  out.t0_sensitivity = run.t0_sensitivity;
  out.n_dim = e.ambient->dim();
  return out;
}

VerificationReport verify_tube_profile(const CatalogEntry& e, const SuiteConfig& cfg) {
  VerificationReport rep = make_report(e, "tube-profile", cfg);
  TubeProfileResult prof = tube_profile(e, cfg);

  double max_resid = 0, max_asym = 0, max_trace_resid = 0;
  for (const ShapeSample& s : prof.samples) {
    if (s.focal_flag) continue;
    max_resid = std::max(max_resid, s.riccati_residual);
    max_asym = std::max(max_asym, (s.S_bar - s.S_bar.transpose()).cwiseAbs().maxCoeff());
    const double rhs = s.S_bar.squaredNorm() + s.ricci_NN;
    max_trace_resid =
        std::max(max_trace_resid, std::abs(s.H_prime - rhs) / (1.0 + std::abs(s.H_prime)));
  }
  rep.add("max Riccati residual", max_resid, cfg.tol.value_or(1e-4));
  rep.add("max |S - S^T|", max_asym, 1e-6);
  rep.add("max trace-identity residual (normalized)", max_trace_resid, 1e-4);
  // Reported, not gated: the series seed is exact only to O(t0^2), so cases
  // with a nonzero quadratic term (g=3) drift above 1e-6 at the default t0.
  if (prof.t0_sensitivity)
    rep.add_info("t0 sensitivity at t=0.5 (t0 vs t0/2)", *prof.t0_sensitivity);

  // Cross-method agreement. The comparison seeds at a tighter t0 and stays
  // away from the focal point, where the seed truncation would be amplified
  // past the agreement tolerance regardless of integrator quality.
  PatchPtr P = e.patches.front();
  const Eigen::VectorXd u =
      P->m() > 0 ? Eigen::VectorXd(0.5 * (P->domain().lo + P->domain().hi)) : Eigen::VectorXd(0);
  const Eigen::VectorXd v = unit_sphere_points(P->codim(), 1, cfg.seed).front();
  const double t_cmp = 0.7 * resolve_t_max(e, cfg);
  std::vector<double> grid = linspace(std::min(cfg.t_min, t_cmp), t_cmp, cfg.t_steps);
  FermiRay ray = normal_frame_ray(P, u, v, t_cmp + 0.05, cfg.step);
  ShapeSample tight_seed = series_seed(*P, u, v, std::min(cfg.t0, 1e-3));
  RiccatiFlow tight_flow(ray, tight_seed);
  std::vector<ShapeSample> jac = shape_via_jacobi(ray, grid);
  double max_diff = 0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    max_diff =
        std::max(max_diff, (tight_flow.eval(grid[i]) - jac[i].S_bar).cwiseAbs().maxCoeff());
  rep.add("Riccati vs Jacobi max difference", max_diff, 1e-5, "seeded at t0<=1e-3");

  if (e.positive_ricci) {
    MeanCurvatureProfile mc = mean_curvature_profile(prof.samples);
    rep.add("H monotone (positive Ricci)", mc.monotone ? 0.0 : 1.0, 0.5);
  }
  if (prof.focal_t) rep.add_info("focal blow-up flagged at t", *prof.focal_t);
  return rep;
}

MetricExpansionReport metric_expansion(const CatalogEntry& e, const SuiteConfig& cfg) {
  PatchPtr P = e.patches.front();
  const Eigen::VectorXd u =
      P->m() > 0 ? Eigen::VectorXd(0.5 * (P->domain().lo + P->domain().hi)) : Eigen::VectorXd(0);
  const Eigen::VectorXd v = unit_sphere_points(P->codim(), 1, cfg.seed).front();
  FermiRay ray = normal_frame_ray(P, u, v, 0.25, cfg.step);
  return validate_metric_expansion(ray, logspace(0.01, 0.2, 8));
}

VerificationReport verify_metric_expansion(const CatalogEntry& e, const SuiteConfig& cfg) {
  VerificationReport rep = make_report(e, "metric-expansion", cfg);
  PatchPtr P = e.patches.front();
  SamplePlan plan = plan_samples(*P, 2, 2, cfg.seed + 13);
  double min_slope = kInf, max_rem = 0;
  bool all_exact = true;
  for (const auto& u : plan.bases) {
    for (const auto& v : plan.dirs) {
      FermiRay ray = normal_frame_ray(P, u, v, 0.25, cfg.step);
      MetricExpansionReport r = validate_metric_expansion(ray, logspace(0.01, 0.2, 8));
      for (double rem : r.remainder) max_rem = std::max(max_rem, rem);
      if (!r.exact) {
        all_exact = false;
        min_slope = std::min(min_slope, r.slope);
      }
    }
  }
  if (all_exact) {
    rep.add("max remainder (expansion exact)", max_rem, 1e-9);
  } else {
    rep.add("remainder slope deficit (2.7 - slope)", 2.7 - min_slope, 0.0 + 1e-12,
            "slope = " + std::to_string(min_slope));
  }
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "transnormal",     "isoparametric",        "cartan-munzner",
      "minimal-focal",   "austere",              "curvature-identities",
      "unique-minimal",  "tube-profile",         "metric-expansion"};
  return names;
}

bool suite_applicable(const CatalogEntry& e, const std::string& suite) {
  if (suite == "transnormal" || suite == "isoparametric" || suite == "minimal-focal" ||
      suite == "austere" || suite == "curvature-identities")
    return e.candidate.has_value();
  if (suite == "cartan-munzner")
    return e.candidate && e.candidate->cm_polynomial.has_value();
  return suite == "unique-minimal" || suite == "tube-profile" || suite == "metric-expansion";
}

VerificationReport run_suite(const CatalogEntry& e, const std::string& suite,
                             const SuiteConfig& cfg) {
  if (!e.gate_ok && suite != "cartan-munzner") {
    VerificationReport rep = make_report(e, suite, cfg);
    rep.pass = false;
    rep.note = "refused: admission gate failed (" + e.gate_note + ")";
    return rep;
  }
  if (suite == "transnormal") return check_transnormal(e, cfg);
  if (suite == "isoparametric") return check_isoparametric(e, cfg);
  if (suite == "cartan-munzner") return check_cartan_gate(e, cfg);
  if (suite == "minimal-focal") return verify_minimal_focal(e, cfg);
  if (suite == "austere") return verify_austere(e, cfg);
  if (suite == "curvature-identities") return verify_curvature_identities(e, cfg);
  if (suite == "unique-minimal") return verify_unique_minimal(e, cfg);
  if (suite == "tube-profile") return verify_tube_profile(e, cfg);
  if (suite == "metric-expansion") return verify_metric_expansion(e, cfg);
  throw UsageError("unknown suite: " + suite);
}

std::vector<VerificationReport> run_all_suites(const CatalogEntry& e, const SuiteConfig& cfg) {
  std::vector<VerificationReport> out;
  for (const std::string& s : suite_names())
    if (suite_applicable(e, s)) out.push_back(run_suite(e, s, cfg));
  return out;
}

}  // namespace tubegeo
