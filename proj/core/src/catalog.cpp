#include "tubegeo/catalog.hpp"

#include <cmath>

#include "tubegeo/curvature.hpp"
#include "tubegeo/errors.hpp"

namespace tubegeo {

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kSqrt2 = std::sqrt(2.0);
const double kSqrt6 = std::sqrt(6.0);

// ------------------------------------------------------------- metric fields

struct EuclideanMetric {
  template <class S>
  void operator()(const Vec<S>& x, Mat<S>& g) const {
    (void)x;
    g.set_identity_scaled(S(1.0));
  }
};

// Stereographic presentation of the unit round sphere; both charts carry the
// same conformal factor 4 / (1+|u|^2)^2.
struct SphereMetric {
  template <class S>
  void operator()(const Vec<S>& u, Mat<S>& g) const {
    S r2(0.0);
    for (int i = 0; i < u.size(); ++i) r2 += u[i] * u[i];
    S c = S(4.0) / ((S(1.0) + r2) * (S(1.0) + r2));
    g.set_identity_scaled(c);
  }
};

struct S2xRMetric {
  template <class S>
  void operator()(const Vec<S>& x, Mat<S>& g) const {
    S r2 = x[0] * x[0] + x[1] * x[1];
    S c = S(4.0) / ((S(1.0) + r2) * (S(1.0) + r2));
    g.set_zero();
    g(0, 0) = c;
    g(1, 1) = c;
    g(2, 2) = S(1.0);
  }
};

// --------------------------------------------------------- sphere chart maps

// Chart 0 projects from the north pole e_{n+1} (covers the sphere minus it),
// chart 1 from the south pole. Inverse maps, chart coords -> R^{n+1}:
template <class S>
void sphere_embed_t(int chart, const Vec<S>& u, Vec<S>& y) {
  const int n = u.size();
  S r2(0.0);
  for (int i = 0; i < n; ++i) r2 += u[i] * u[i];
  S denom = S(1.0) + r2;
  for (int i = 0; i < n; ++i) y[i] = S(2.0) * u[i] / denom;
  S last = (r2 - S(1.0)) / denom;
  y[n] = (chart == 0) ? last : S(0.0) - last;
}

Eigen::VectorXd sphere_project(int chart, const Eigen::VectorXd& y) {
  const int n = static_cast<int>(y.size()) - 1;
  const double denom = (chart == 0) ? 1.0 - y[n] : 1.0 + y[n];
  return y.head(n) / denom;
}

// Differential of the stereographic projection at y applied to w.
Eigen::VectorXd sphere_project_diff(int chart, const Eigen::VectorXd& y,
                                    const Eigen::VectorXd& w) {
  const int n = static_cast<int>(y.size()) - 1;
  const double denom = (chart == 0) ? 1.0 - y[n] : 1.0 + y[n];
  const double ddenom = (chart == 0) ? -w[n] : w[n];
  return w.head(n) / denom - y.head(n) * (ddenom / (denom * denom));
}

int sphere_chart_for(const Eigen::VectorXd& y) { return y[y.size() - 1] <= 0.5 ? 0 : 1; }

struct InvertChart {
  int n;
  template <class S>
  void operator()(const Vec<S>& u, Vec<S>& w) const {
    S r2(0.0);
    for (int i = 0; i < n; ++i) r2 += u[i] * u[i];
    for (int i = 0; i < n; ++i) w[i] = u[i] / r2;
  }
};

struct InvertChartS2xR {
  template <class S>
  void operator()(const Vec<S>& x, Vec<S>& w) const {
    S r2 = x[0] * x[0] + x[1] * x[1];
    w[0] = x[0] / r2;
    w[1] = x[1] / r2;
    w[2] = x[2];
  }
};

struct SphereEmbedMap {
  int chart, n;
  template <class S>
  void operator()(const Vec<S>& u, Vec<S>& y) const {
    sphere_embed_t(chart, u, y);
  }
};

struct IdentityMap {
  template <class S>
  void operator()(const Vec<S>& x, Vec<S>& y) const {
    for (int i = 0; i < x.size(); ++i) y[i] = x[i];
  }
};

struct S2xREmbedMap {
  int chart;
  template <class S>
  void operator()(const Vec<S>& x, Vec<S>& y) const {
    Vec<S> u(2), ys(3);
    u[0] = x[0];
    u[1] = x[1];
    sphere_embed_t(chart, u, ys);
    y[0] = ys[0];
    y[1] = ys[1];
    y[2] = ys[2];
    y[3] = x[2];
  }
};

double sphere_arc(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return std::acos(std::clamp(a.dot(b), -1.0, 1.0));
}

}  // namespace

// ----------------------------------------------------------------- manifolds

ManifoldPtr make_euclidean(int n) {
  if (n < 1) throw UsageError("euclidean: n must be >= 1");
  auto M = std::make_shared<ChartedManifold>("euclidean(" + std::to_string(n) + ")", n);
  M->add_chart(MetricFn::make(n, EuclideanMetric{}), 1e100, 1e100);
  M->set_embeddings({MapFn::make(n, n, IdentityMap{})},
                    [n](const Eigen::VectorXd& y) { return ChartPoint{0, y.head(n)}; });
  M->set_distance(
      [](const ChartPoint& a, const ChartPoint& b) { return (a.x - b.x).norm(); });
  return M;
}

ManifoldPtr make_sphere(int n) {
  if (n < 2) throw UsageError("sphere: n must be >= 2");
  auto M = std::make_shared<ChartedManifold>("sphere(" + std::to_string(n) + ")", n);
  M->add_chart(MetricFn::make(n, SphereMetric{}), 2.0, 12.0);
  M->add_chart(MetricFn::make(n, SphereMetric{}), 2.0, 12.0);
  M->set_transition(0, 1, MapFn::make(n, n, InvertChart{n}));
  M->set_transition(1, 0, MapFn::make(n, n, InvertChart{n}));
  M->set_embeddings({MapFn::make(n, n + 1, SphereEmbedMap{0, n}),
                     MapFn::make(n, n + 1, SphereEmbedMap{1, n})},
                    [](const Eigen::VectorXd& y) {
                      const int c = sphere_chart_for(y);
                      return ChartPoint{c, sphere_project(c, y)};
                    });
  auto Mw = std::weak_ptr<const ChartedManifold>(M);
  M->set_distance([Mw](const ChartPoint& a, const ChartPoint& b) {
    auto Ms = Mw.lock();
    return sphere_arc(Ms->embed(a), Ms->embed(b));
  });
  return M;
}

ManifoldPtr make_s2xr() {
  auto M = std::make_shared<ChartedManifold>("s2xr", 3);
  // Domain bound applies to the full coordinate norm; the line factor is kept
  // to |z| < 10 at catalog scale, plenty for desk-scale tubes.
  M->add_chart(MetricFn::make(3, S2xRMetric{}), 2.0, 16.0);
  M->add_chart(MetricFn::make(3, S2xRMetric{}), 2.0, 16.0);
  M->set_transition(0, 1, MapFn::make(3, 3, InvertChartS2xR{}));
  M->set_transition(1, 0, MapFn::make(3, 3, InvertChartS2xR{}));
  M->set_embeddings({MapFn::make(3, 4, S2xREmbedMap{0}), MapFn::make(3, 4, S2xREmbedMap{1})},
                    [](const Eigen::VectorXd& y) {
                      Eigen::VectorXd ys = y.head(3);
                      const int c = sphere_chart_for(ys);
                      Eigen::VectorXd x(3);
                      x.head(2) = sphere_project(c, ys);
                      x[2] = y[3];
                      return ChartPoint{c, x};
                    });
  auto Mw = std::weak_ptr<const ChartedManifold>(M);
  M->set_distance([Mw](const ChartPoint& a, const ChartPoint& b) {
    auto Ms = Mw.lock();
    Eigen::VectorXd ya = Ms->embed(a), yb = Ms->embed(b);
    const double arc = sphere_arc(ya.head(3), yb.head(3));
    const double dz = ya[3] - yb[3];
    return std::sqrt(arc * arc + dz * dz);
  });
  return M;
}

// ------------------------------------------------------------------- patches

namespace {

struct PointParam {
  std::vector<double> coords;
  template <class S>
  void operator()(int, const Vec<S>&, Vec<S>& x) const {
    for (std::size_t i = 0; i < coords.size(); ++i) x[static_cast<int>(i)] = S(coords[i]);
  }
};

struct HyperplaneParam {
  int n;
  template <class S>
  void operator()(int, const Vec<S>& u, Vec<S>& x) const {
    for (int i = 0; i < n - 1; ++i) x[i] = u[i];
    x[n - 1] = S(0.0);
  }
};

struct CircleParam {
  double r;
  template <class S>
  void operator()(int, const Vec<S>& u, Vec<S>& x) const {
    x[0] = S(r) * cos(u[0]);
    x[1] = S(r) * sin(u[0]);
  }
};

// u (p angles) -> unit vector in R^{p+1}: spherical coordinates.
template <class S>
void spherical_point(const Vec<S>& u, Vec<S>& y) {
  const int p = u.size();
  S prod(1.0);
  for (int j = 0; j < p; ++j) {
    y[j] = prod * cos(u[j]);
    prod = prod * sin(u[j]);
  }
  y[p] = prod;
}

struct SubsphereParam {
  int n, p, off;
  template <class S>
  void operator()(int chart, const Vec<S>& u, Vec<S>& x) const {
    Vec<S> w(p + 1);
    spherical_point(u, w);
    Vec<S> y(n + 1);
    for (int i = 0; i <= n; ++i) y[i] = S(0.0);
    for (int j = 0; j <= p; ++j) y[off + j] = w[j];
    S denom = (chart == 0) ? S(1.0) - y[n] : S(1.0) + y[n];
    for (int i = 0; i < n; ++i) x[i] = y[i] / denom;
  }
};

ParamBox angle_box(int p) {
  ParamBox box;
  box.lo.resize(p);
  box.hi.resize(p);
  for (int i = 0; i + 1 < p; ++i) {
    box.lo[i] = 0.35;
    box.hi[i] = kPi - 0.35;
  }
  box.lo[p - 1] = 0.15;
  box.hi[p - 1] = 2.0 * kPi - 0.15;
  return box;
}

// Veronese surface in S^4 via the trace-form model: unit w in S^2 maps to
// sign * (3 w w^T - I)/sqrt(6) inside the traceless symmetric 3x3 matrices
// with <A,B> = tr(AB), identified with R^5 by an orthonormal basis.
template <class S>
void sym3_to_coords(const S M[3][3], Vec<S>& x) {
  x[0] = (M[0][0] - M[1][1]) / kSqrt2;
  x[1] = (M[0][0] + M[1][1] - S(2.0) * M[2][2]) / kSqrt6;
  x[2] = kSqrt2 * M[0][1];
  x[3] = kSqrt2 * M[0][2];
  x[4] = kSqrt2 * M[1][2];
}

struct VeroneseParam {
  double sign;
  template <class S>
  void operator()(int chart, const Vec<S>& u, Vec<S>& x) const {
    S th = u[0], ph = u[1];
    S w[3] = {sin(th) * cos(ph), sin(th) * sin(ph), cos(th)};
    S A[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        A[i][j] = S(3.0 * sign / kSqrt6) * w[i] * w[j];
        if (i == j) A[i][j] = A[i][j] - S(sign / kSqrt6);
      }
    Vec<S> y(5);
    sym3_to_coords(A, y);
    S denom = (chart == 0) ? S(1.0) - y[4] : S(1.0) + y[4];
    for (int i = 0; i < 4; ++i) x[i] = y[i] / denom;
  }
};

Eigen::VectorXd sym3_to_coords_d(const Eigen::Matrix3d& M) {
  Eigen::VectorXd x(5);
  x[0] = (M(0, 0) - M(1, 1)) / kSqrt2;
  x[1] = (M(0, 0) + M(1, 1) - 2.0 * M(2, 2)) / kSqrt6;
  x[2] = kSqrt2 * M(0, 1);
  x[3] = kSqrt2 * M(0, 2);
  x[4] = kSqrt2 * M(1, 2);
  return x;
}

Eigen::VectorXd veronese_embed(double sign, double th, double ph) {
  Eigen::Vector3d w(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th));
  Eigen::Matrix3d A =
      (sign / kSqrt6) * (3.0 * w * w.transpose() - Eigen::Matrix3d::Identity());
  return sym3_to_coords_d(A);
}

}  // namespace

PatchPtr make_point_patch(ManifoldPtr M, const ChartPoint& p, const std::string& label) {
  const int n = M->dim();
  Eigen::MatrixXd g = metric_at(*M, p);
  Eigen::MatrixXd frame = orthonormalize(g, Eigen::MatrixXd::Identity(n, n));
  PointParam param;
  param.coords.assign(p.x.data(), p.x.data() + n);
  ParamBox box;
  box.lo.resize(0);
  box.hi.resize(0);
  const int chart = p.chart;
  return SubmanifoldPatch::make(
      M, label, 0, box, [chart](const Eigen::VectorXd&) { return chart; }, param,
      EuclideanMetric{}, [frame](int, const Eigen::VectorXd&) { return frame; });
}

PatchPtr make_hyperplane_patch(ManifoldPtr euclid, const std::string& label) {
  const int n = euclid->dim();
  ParamBox box;
  box.lo = Eigen::VectorXd::Constant(n - 1, -2.0);
  box.hi = Eigen::VectorXd::Constant(n - 1, 2.0);
  Eigen::MatrixXd frame = Eigen::MatrixXd::Zero(n, 1);
  frame(n - 1, 0) = 1.0;
  return SubmanifoldPatch::make(
      euclid, label, n - 1, box, [](const Eigen::VectorXd&) { return 0; }, HyperplaneParam{n},
      EuclideanMetric{}, [frame](int, const Eigen::VectorXd&) { return frame; });
}

PatchPtr make_circle_patch(ManifoldPtr euclid2, double radius, const std::string& label) {
  ParamBox box;
  box.lo = Eigen::VectorXd::Constant(1, 0.0);
  box.hi = Eigen::VectorXd::Constant(1, 2.0 * kPi);
  return SubmanifoldPatch::make(
      euclid2, label, 1, box, [](const Eigen::VectorXd&) { return 0; }, CircleParam{radius},
      EuclideanMetric{}, [](int, const Eigen::VectorXd& u) {
        Eigen::MatrixXd frame(2, 1);
        frame(0, 0) = std::cos(u[0]);
        frame(1, 0) = std::sin(u[0]);
        return frame;
      });
}

PatchPtr make_subsphere_patch(ManifoldPtr sphere, int p, int block_start,
                              const std::string& label) {
  const int n = sphere->dim();
  if (p < 1 || block_start < 0 || block_start + p > n)
    throw UsageError("subsphere: invalid block [" + std::to_string(block_start) + ", " +
                     std::to_string(block_start + p) + "] in S^" + std::to_string(n));
  SubsphereParam param{n, p, block_start};

  auto chart_of = [n, p, block_start](const Eigen::VectorXd& u) {
    Vec<double> uu(static_cast<int>(u.size()));
    for (int i = 0; i < u.size(); ++i) uu[i] = u[i];
    Vec<double> w(p + 1);
    spherical_point(uu, w);
    Eigen::VectorXd y = Eigen::VectorXd::Zero(n + 1);
    for (int j = 0; j <= p; ++j) y[block_start + j] = w[j];
    return sphere_chart_for(y);
  };

  auto normal_frame = [n, p, block_start](int chart, const Eigen::VectorXd& u) {
    Vec<double> uu(static_cast<int>(u.size()));
    for (int i = 0; i < u.size(); ++i) uu[i] = u[i];
    Vec<double> w(p + 1);
    spherical_point(uu, w);
    Eigen::VectorXd y = Eigen::VectorXd::Zero(n + 1);
    for (int j = 0; j <= p; ++j) y[block_start + j] = w[j];
    Eigen::MatrixXd frame(n, n - p);
    int col = 0;
    for (int j = 0; j <= n; ++j) {
      if (j >= block_start && j <= block_start + p) continue;
      Eigen::VectorXd e = Eigen::VectorXd::Unit(n + 1, j);
      frame.col(col++) = sphere_project_diff(chart, y, e);
    }
    return frame;
  };

  return SubmanifoldPatch::make(sphere, label, p, angle_box(p), chart_of, param, SphereMetric{},
                                normal_frame);
}

PatchPtr make_veronese_patch(ManifoldPtr s4, int sign, const std::string& label) {
  if (s4->dim() != 4) throw UsageError("veronese: ambient must be S^4");
  const double s = sign >= 0 ? 1.0 : -1.0;
  ParamBox box;
  box.lo.resize(2);
  box.hi.resize(2);
  box.lo << 0.3, 0.15;
  box.hi << kPi - 0.3, 2.0 * kPi - 0.15;

  auto chart_of = [s](const Eigen::VectorXd& u) {
    return sphere_chart_for(veronese_embed(s, u[0], u[1]));
  };

  auto normal_frame = [s](int chart, const Eigen::VectorXd& u) {
    const double th = u[0], ph = u[1];
    Eigen::VectorXd y = veronese_embed(s, th, ph);
    Eigen::Vector3d eth(std::cos(th) * std::cos(ph), std::cos(th) * std::sin(ph), -std::sin(th));
    Eigen::Vector3d eph(-std::sin(ph), std::cos(ph), 0.0);
    Eigen::Matrix3d N1 =
        (eth * eth.transpose() - eph * eph.transpose()) / kSqrt2;
    Eigen::Matrix3d N2 =
        (eth * eph.transpose() + eph * eth.transpose()) / kSqrt2;
    Eigen::MatrixXd frame(4, 2);
    frame.col(0) = sphere_project_diff(chart, y, sym3_to_coords_d(N1));
    frame.col(1) = sphere_project_diff(chart, y, sym3_to_coords_d(N2));
    return frame;
  };

  return SubmanifoldPatch::make(s4, label, 2, box, chart_of, VeroneseParam{s}, SphereMetric{},
                                normal_frame);
}

// ------------------------------------------------------ Cartan-Munzner gate

namespace {

struct CartanCubic {
  double eps;
  template <class S>
  S operator()(const Vec<S>& x) const {
    S A11 = x[0] / kSqrt2 + x[1] / kSqrt6;
    S A22 = S(0.0) - x[0] / kSqrt2 + x[1] / kSqrt6;
    S A33 = S(0.0) - S(2.0) * x[1] / kSqrt6;
    S A12 = x[2] / kSqrt2;
    S A13 = x[3] / kSqrt2;
    S A23 = x[4] / kSqrt2;
    S det = A11 * (A22 * A33 - A23 * A23) - A12 * (A12 * A33 - A23 * A13) +
            A13 * (A12 * A23 - A22 * A13);
    S F = S(3.0 * kSqrt6) * det;
    if (eps != 0.0) F = F + S(eps) * x[0] * x[0] * x[1];
    return F;
  }
};

struct HeightPoly {
  int n;
  template <class S>
  S operator()(const Vec<S>& y) const {
    return y[n];
  }
};

struct HeightSqPoly {
  int n;
  template <class S>
  S operator()(const Vec<S>& y) const {
    return y[n] * y[n];
  }
};

// Sum over the last q+1 coordinates, so the S^p block is the f-minimum
// focal variety and the S^q block the maximum.
struct CliffordPoly {
  int p, n;
  template <class S>
  S operator()(const Vec<S>& y) const {
    S s(0.0);
    for (int i = p + 1; i <= n; ++i) s += y[i] * y[i];
    return s;
  }
};

// f = F restricted to the sphere, expressed per chart through the embedding.
template <class PolyT>
struct SphereRestricted {
  int n;
  PolyT F;
  template <class S>
  S operator()(int chart, const Vec<S>& u) const {
    Vec<S> y(n + 1);
    sphere_embed_t(chart, u, y);
    return F(y);
  }
};

}  // namespace

PolyFn make_cartan_cubic(double perturbation) {
  return PolyFn::make(5, 3, CartanCubic{perturbation});
}

CartanGateResult verify_cartan_munzner(const PolyFn& F, int g_deg, int n_points,
                                       std::uint64_t seed) {
  const int n = F.n;
  Rng rng(seed);
  CartanGateResult res;
  std::vector<double> laps, rs;
  laps.reserve(static_cast<std::size_t>(n_points));
  rs.reserve(static_cast<std::size_t>(n_points));
  std::vector<Eigen::VectorXd> pts;
  for (int s = 0; s < n_points; ++s) {
    Eigen::VectorXd x = rng.unit_vector(n) * rng.uniform(0.5, 1.5);
    pts.push_back(x);
    double grad2 = 0, lap = 0;
    for (int k = 0; k < n; ++k) {
      Vec<D2> xx(n);
      for (int i = 0; i < n; ++i) xx[i] = D2(x[i]);
      xx[k].b.a += 1.0;
      xx[k].a.b += 1.0;
      D2 v = F.e2(xx);
      grad2 += v.b.a * v.b.a;
      lap += v.b.b;
    }
    const double r = x.norm();
    res.grad_residual = std::max(
        res.grad_residual,
        std::abs(grad2 - static_cast<double>(g_deg * g_deg) * std::pow(r, 2 * g_deg - 2)));
    laps.push_back(lap);
    rs.push_back(std::pow(r, g_deg - 2));
  }
  double num = 0, den = 0;
  for (std::size_t i = 0; i < laps.size(); ++i) {
    num += laps[i] * rs[i];
    den += rs[i] * rs[i];
  }
  res.fitted_c = den > 0 ? num / den : 0.0;
  for (std::size_t i = 0; i < laps.size(); ++i)
    res.lap_residual = std::max(res.lap_residual, std::abs(laps[i] - res.fitted_c * rs[i]));
  res.pass = res.grad_residual < 1e-10 && res.lap_residual < 1e-10;
  return res;
}

// ------------------------------------------------------------------- entries

namespace {

std::function<ChartPoint(Rng&)> sphere_sampler(ManifoldPtr M) {
  const int n = M->dim();
  return [M, n](Rng& rng) { return M->unembed(rng.unit_vector(n + 1)); };
}

CatalogEntry entry_euclidean_point(int n) {
  CatalogEntry e;
  e.label = "euclidean-point(" + std::to_string(n) + ")";
  e.ambient = make_euclidean(n);
  e.patches = {make_point_patch(e.ambient, ChartPoint{0, Eigen::VectorXd::Zero(n)},
                                e.label + "/origin")};
  e.default_t_max = 5.0;
  return e;
}

CatalogEntry entry_euclidean_plane(int n) {
  CatalogEntry e;
  e.label = "euclidean-plane(" + std::to_string(n) + ")";
  e.ambient = make_euclidean(n);
  e.patches = {make_hyperplane_patch(e.ambient, e.label + "/plane")};
  e.default_t_max = 5.0;
  return e;
}

CatalogEntry entry_s2_point() {
  CatalogEntry e;
  e.label = "s2-point";
  e.ambient = make_sphere(2);
  e.patches = {make_point_patch(e.ambient, ChartPoint{0, Eigen::VectorXd::Zero(2)},
                                e.label + "/south")};
  e.positive_ricci = true;
  e.constant_principal_curvatures = true;
  e.default_t_max = 3.0;
  return e;
}

CatalogEntry entry_sn_height(int n) {
  CatalogEntry e;
  e.label = "sn-height(" + std::to_string(n) + ")";
  e.ambient = make_sphere(n);
  auto south = make_point_patch(e.ambient, ChartPoint{0, Eigen::VectorXd::Zero(n)},
                                e.label + "/south");
  auto north = make_point_patch(e.ambient, ChartPoint{1, Eigen::VectorXd::Zero(n)},
                                e.label + "/north");
  e.patches = {south, north};
  IsoparametricCandidate c;
  c.f = ScalarFn::make(SphereRestricted<HeightPoly>{n, HeightPoly{n}});
  c.f_min = -1.0;
  c.f_max = 1.0;
  c.focal_minus = south;
  c.focal_plus = north;
  c.proper = true;
  c.sample_point = sphere_sampler(e.ambient);
  e.candidate = std::move(c);
  e.positive_ricci = true;
  e.constant_principal_curvatures = true;
  e.default_t_max = 3.0;
  return e;
}

CatalogEntry entry_sn_height_squared(int n) {
  CatalogEntry e;
  e.label = "sn-height-squared(" + std::to_string(n) + ")";
  e.ambient = make_sphere(n);
  auto equator = make_subsphere_patch(e.ambient, n - 1, 0, e.label + "/equator");
  auto north = make_point_patch(e.ambient, ChartPoint{1, Eigen::VectorXd::Zero(n)},
                                e.label + "/north");
  e.patches = {equator, north};
  IsoparametricCandidate c;
  c.f = ScalarFn::make(SphereRestricted<HeightSqPoly>{n, HeightSqPoly{n}});
  c.f_min = 0.0;
  c.f_max = 1.0;
  c.focal_minus = equator;  // codimension 1: non-proper
  c.focal_plus = north;
  c.proper = false;
  c.sample_point = sphere_sampler(e.ambient);
  e.candidate = std::move(c);
  e.positive_ricci = true;
  e.constant_principal_curvatures = true;
  e.default_t_max = 0.5 * kPi - 0.22;
  return e;
}

CatalogEntry entry_sn_clifford(int p, int q) {
  const int n = p + q + 1;
  CatalogEntry e;
  e.label = "sn-clifford(" + std::to_string(p) + "," + std::to_string(q) + ")";
  e.ambient = make_sphere(n);
  auto sp = make_subsphere_patch(e.ambient, p, 0, e.label + "/S^p");
  auto sq = make_subsphere_patch(e.ambient, q, p + 1, e.label + "/S^q");
  e.patches = {sp, sq};
  IsoparametricCandidate c;
  c.f = ScalarFn::make(SphereRestricted<CliffordPoly>{n, CliffordPoly{p, n}});
  c.f_min = 0.0;
  c.f_max = 1.0;
  c.focal_minus = sp;  // f = 0 on the S^p block
  c.focal_plus = sq;   // f = 1 on the S^q block
  c.proper = true;
  c.sample_point = sphere_sampler(e.ambient);
  e.candidate = std::move(c);
  e.positive_ricci = true;
  e.constant_principal_curvatures = true;
  e.default_t_max = 0.5 * kPi - 0.12;
  return e;
}

CatalogEntry entry_s4_cartan(const CatalogOptions& opts) {
  CatalogEntry e;
  e.label = "s4-cartan";
  e.ambient = make_sphere(4);
  auto mplus = make_veronese_patch(e.ambient, +1, e.label + "/M+");
  auto mminus = make_veronese_patch(e.ambient, -1, e.label + "/M-");
  e.patches = {mplus, mminus};

  PolyFn F = make_cartan_cubic(opts.cartan_perturbation);
  CartanGateResult gate = verify_cartan_munzner(F, 3, opts.gate_points, opts.gate_seed);
  e.gate_ok = gate.pass;
  e.gate_note = gate.pass ? "ok"
                          : "GATE-FAILED(cartan-munzner): grad residual " +
                                std::to_string(gate.grad_residual) + ", laplacian residual " +
                                std::to_string(gate.lap_residual);

  IsoparametricCandidate c;
  c.f = ScalarFn::make(SphereRestricted<CartanCubic>{4, CartanCubic{opts.cartan_perturbation}});
  c.f_min = -1.0;
  c.f_max = 1.0;
  c.focal_minus = mminus;
  c.focal_plus = mplus;
  c.proper = true;
  c.sample_point = sphere_sampler(e.ambient);
  c.cm_polynomial = F;
  c.cm_degree = 3;
  e.candidate = std::move(c);
  e.positive_ricci = true;
  e.constant_principal_curvatures = true;
  e.default_t_max = kPi / 3.0 - 0.08;
  return e;
}

CatalogEntry entry_s2xr() {
  CatalogEntry e;
  e.label = "s2xr-product";
  e.ambient = make_s2xr();
  e.patches = {make_point_patch(e.ambient, ChartPoint{0, Eigen::VectorXd::Zero(3)},
                                e.label + "/origin")};
  e.default_t_max = 2.6;
  return e;
}

}  // namespace

CatalogEntry make_entry(const std::string& name, int n, int p, int q,
                        const CatalogOptions& opts) {
  if (name == "euclidean-point") {
    if (n < 2) throw UsageError("euclidean-point: need n >= 2");
    return entry_euclidean_point(n);
  }
  if (name == "euclidean-plane") {
    if (n < 2) throw UsageError("euclidean-plane: need n >= 2");
    return entry_euclidean_plane(n);
  }
  if (name == "s2-point") return entry_s2_point();
  if (name == "sn-height") {
    if (n < 2) throw UsageError("sn-height: need n >= 2");
    return entry_sn_height(n);
  }
  if (name == "sn-height-squared") {
    if (n < 2) throw UsageError("sn-height-squared: need n >= 2");
    return entry_sn_height_squared(n);
  }
  if (name == "sn-clifford") {
    if (p < 1 || q < 1) throw UsageError("sn-clifford: need p, q >= 1");
    return entry_sn_clifford(p, q);
  }
  if (name == "s4-cartan") return entry_s4_cartan(opts);
  if (name == "s2xr-product") return entry_s2xr();
  throw UsageError("unknown catalog case: " + name);
}

std::vector<CatalogEntry> default_catalog(const CatalogOptions& opts) {
  std::vector<CatalogEntry> entries;
  entries.push_back(make_entry("euclidean-point", 3, 0, 0, opts));
  entries.push_back(make_entry("euclidean-plane", 3, 0, 0, opts));
  entries.push_back(make_entry("s2-point", 0, 0, 0, opts));
  entries.push_back(make_entry("sn-height", 4, 0, 0, opts));
  entries.push_back(make_entry("sn-height-squared", 4, 0, 0, opts));
  entries.push_back(make_entry("sn-clifford", 0, 1, 2, opts));
  entries.push_back(make_entry("s4-cartan", 0, 0, 0, opts));
  entries.push_back(make_entry("s2xr-product", 0, 0, 0, opts));
  return entries;
}

CatalogEntry resolve_case(const std::string& label, std::optional<int> n, std::optional<int> p,
                          std::optional<int> q, const CatalogOptions& opts) {
  std::string name = label;
  std::vector<int> args;
  const std::size_t paren = label.find('(');
  if (paren != std::string::npos) {
    if (label.back() != ')') throw UsageError("malformed case label: " + label);
    name = label.substr(0, paren);
    std::string inner = label.substr(paren + 1, label.size() - paren - 2);
    std::size_t pos = 0;
    while (pos < inner.size()) {
      std::size_t comma = inner.find(',', pos);
      if (comma == std::string::npos) comma = inner.size();
      args.push_back(std::stoi(inner.substr(pos, comma - pos)));
      pos = comma + 1;
    }
  }
  int nn = n.value_or(!args.empty() ? args[0] : (name.rfind("euclidean", 0) == 0 ? 3 : 4));
  int pp = p.value_or(args.size() > 0 ? args[0] : 1);
  int qq = q.value_or(args.size() > 1 ? args[1] : 2);
  return make_entry(name, nn, pp, qq, opts);
}

}  // namespace tubegeo
