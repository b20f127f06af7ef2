#include <cmath>

#include "doctest.h"
#include "tubegeo/catalog.hpp"
#include "tubegeo/curvature.hpp"
#include "tubegeo/fermi.hpp"
#include "tubegeo/geodesic.hpp"
#include "tubegeo/sampling.hpp"

using namespace tubegeo;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("straight line in euclidean space") {
  auto e3 = make_euclidean(3);
  PathRecord path =
      integrate_geodesic(*e3, {0, Eigen::Vector3d::Zero()}, Eigen::Vector3d(1, 0, 0), 2.0, 1e-3);
  CHECK((path.last().x - Eigen::Vector3d(2, 0, 0)).norm() < 1e-12);
  CHECK(path.segments.size() == 1);
}

TEST_CASE("great circle closes after 2 pi, crossing both charts") {
  auto s2 = make_sphere(2);
  ChartPoint p{0, Eigen::Vector2d(0, 0)};
  Eigen::Vector2d w(0.5, 0.0);  // unit for g = 4 I
  PathRecord path = integrate_geodesic(*s2, p, w, 2.0 * kPi, 1e-3);
  CHECK(path.segments.size() >= 3);  // enters the antipodal chart and returns
  CHECK(path.last_chart() == 0);
  CHECK((path.last().x - p.x).norm() < 1e-6);
}

TEST_CASE("quarter circle from the south pole ends on the equator") {
  auto s2 = make_sphere(2);
  Rng rng(3);
  for (int i = 0; i < 4; ++i) {
    Eigen::Vector2d dir = rng.unit_vector(2);
    PathRecord path =
        integrate_geodesic(*s2, {0, Eigen::Vector2d::Zero()}, 0.5 * dir, 0.5 * kPi, 1e-3);
    Eigen::VectorXd y = s2->embed({path.last_chart(), path.last().x});
    CHECK(std::abs(y[2]) < 1e-7);
  }
}

TEST_CASE("unit-speed drift stays below 1e-8 * t_max") {
  auto s4 = make_sphere(4);
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    ChartPoint p = s4->unembed(rng.unit_vector(5));
    Eigen::MatrixXd g = metric_at(*s4, p);
    Eigen::VectorXd w = rng.gaussian_vector(4);
    w /= std::sqrt(w.dot(g * w));
    PathRecord path = integrate_geodesic(*s4, p, w, 2.0, 1e-3);
    for (const auto& seg : path.segments)
      for (const auto& node : seg.nodes) {
        Eigen::MatrixXd gn = metric_at(*s4, {seg.chart, node.x});
        CHECK(std::abs(node.v.dot(gn * node.v) - 1.0) < 1e-8 * 2.0);
      }
  }
}

TEST_CASE("reversibility: forward then backward returns to start") {
  auto s2 = make_sphere(2);
  Rng rng(13);
  for (int i = 0; i < 10; ++i) {
    ChartPoint p{0, Eigen::Vector2d(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5))};
    Eigen::MatrixXd g = metric_at(*s2, p);
    Eigen::VectorXd w = rng.unit_vector(2);
    w /= std::sqrt(w.dot(g * w));
    PathRecord fwd = integrate_geodesic(*s2, p, w, 1.7, 1e-3);
    ChartPoint q{fwd.last_chart(), fwd.last().x};
    PathRecord back = integrate_geodesic(*s2, q, -fwd.last().v, 1.7, 1e-3);
    ChartPoint end{back.last_chart(), back.last().x};
    if (end.chart != p.chart) end = s2->transfer_point(end, p.chart);
    CHECK((end.x - p.x).norm() < 1e-6);
  }
}

TEST_CASE("rejects non-unit directions") {
  auto e3 = make_euclidean(3);
  CHECK_THROWS_AS(
      integrate_geodesic(*e3, {0, Eigen::Vector3d::Zero()}, Eigen::Vector3d(2, 0, 0), 1.0, 1e-3),
      NotUnitVector);
}

TEST_CASE("transport is constant in flat space") {
  auto e3 = make_euclidean(3);
  PathRecord path =
      integrate_geodesic(*e3, {0, Eigen::Vector3d::Zero()}, Eigen::Vector3d(0, 1, 0), 1.0, 1e-3);
  Eigen::MatrixXd frame = Eigen::MatrixXd::Identity(3, 3);
  auto frames = parallel_transport_frame(*e3, path, frame);
  CHECK((frames.back() - frame).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("transport around a closed great circle has trivial holonomy") {
  auto s2 = make_sphere(2);
  ChartPoint p{0, Eigen::Vector2d(0, 0)};
  PathRecord path = integrate_geodesic(*s2, p, Eigen::Vector2d(0.5, 0), 2.0 * kPi, 1e-3);
  Eigen::MatrixXd frame(2, 2);
  frame << 0.5, 0, 0, 0.5;  // orthonormal for g = 4 I
  auto frames = parallel_transport_frame(*s2, path, frame);
  // Angle between transported and original first vector, in the metric.
  Eigen::MatrixXd g = metric_at(*s2, p);
  const double c = frames.back().col(0).dot(g * frame.col(0));
  CHECK(std::abs(std::acos(std::clamp(c, -1.0, 1.0))) < 1e-6);
}

TEST_CASE("latitude-circle holonomy is 2 pi (1 - cos theta)") {
  // Transport along a non-geodesic closed curve, built in closed form.
  auto s2 = make_sphere(2);
  const double theta = kPi / 3.0;
  const int n_nodes = 4000;
  PathSegment seg;
  seg.chart = 0;
  for (int i = 0; i <= n_nodes; ++i) {
    const double phi = 2.0 * kPi * i / n_nodes;
    // Chart image of the latitude circle: radius cot(theta/2)... the circle
    // at colatitude theta from the north pole sits at |u| = sin/(1-cos).
    const double r = std::sin(theta) / (1.0 - std::cos(theta));
    PathNode node;
    node.t = phi;
    node.x = Eigen::Vector2d(r * std::cos(phi), r * std::sin(phi));
    node.v = Eigen::Vector2d(-r * std::sin(phi), r * std::cos(phi));
    seg.nodes.push_back(node);
  }
  PathRecord path;
  path.segments.push_back(seg);
  path.t_max = 2.0 * kPi;

  ChartPoint p0{0, seg.nodes.front().x};
  Eigen::MatrixXd g = metric_at(*s2, p0);
  Eigen::MatrixXd frame = orthonormalize(g, Eigen::MatrixXd::Identity(2, 2)).leftCols(1);
  auto frames = parallel_transport_frame(*s2, path, frame);
  const double c = frames.back().col(0).dot(g * frame.col(0));
  const double angle = std::acos(std::clamp(c, -1.0, 1.0));
  // Rotation by 2 pi (1 - cos theta) = pi at theta = pi/3.
  CHECK(angle == doctest::Approx(kPi).epsilon(1e-5));
}

TEST_CASE("transport preserves the Gram matrix to 1e-7") {
  auto s4 = make_sphere(4);
  Rng rng(19);
  for (int i = 0; i < 5; ++i) {
    ChartPoint p = s4->unembed(rng.unit_vector(5));
    Eigen::MatrixXd g = metric_at(*s4, p);
    Eigen::VectorXd w = rng.gaussian_vector(4);
    w /= std::sqrt(w.dot(g * w));
    PathRecord path = integrate_geodesic(*s4, p, w, 2.5, 1e-3);
    Eigen::MatrixXd cols(4, 3);
    for (int c = 0; c < 3; ++c) cols.col(c) = rng.gaussian_vector(4);
    Eigen::MatrixXd frame = orthonormalize(g, cols);
    auto frames = parallel_transport_frame(*s4, path, frame);
    std::size_t idx = 0;
    for (const auto& segm : path.segments)
      for (const auto& node : segm.nodes) {
        Eigen::MatrixXd gn = metric_at(*s4, {segm.chart, node.x});
        Eigen::MatrixXd gram = frames[idx].transpose() * gn * frames[idx];
        CHECK((gram - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-7);
        ++idx;
      }
  }
}

TEST_CASE("normal_frame_ray: straight ray from a euclidean point") {
  auto e = make_entry("euclidean-point", 3, 0, 0, {});
  Eigen::VectorXd u(0);
  Eigen::Vector3d v(0, 0, 1);
  FermiRay ray = normal_frame_ray(e.patches.front(), u, v, 2.0, 1e-3);
  RayState st = ray.state_at(2.0);
  CHECK((st.x - Eigen::Vector3d(0, 0, 2)).norm() < 1e-12);
  CHECK((st.E - ray.base().frame.leftCols(2)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("normal_frame_ray: meridian from the equator reaches the pole") {
  auto e = make_entry("sn-height-squared", 2, 0, 0, {});  // equator of S^2
  PatchPtr P = e.candidate->focal_minus;
  Eigen::VectorXd u(1);
  u << 1.0;
  Eigen::VectorXd v(1);
  v << 1.0;
  FermiRay ray = normal_frame_ray(P, u, v, 0.5 * kPi, 1e-3);
  RayState st = ray.state_at(0.5 * kPi);
  Eigen::VectorXd y = P->ambient()->embed({st.chart, st.x});
  CHECK(std::abs(std::abs(y[2]) - 1.0) < 1e-7);  // a pole
}

TEST_CASE("ray frame stays g-orthonormal along the ray") {
  auto e = make_entry("s4-cartan", 0, 0, 0, {});
  PatchPtr P = e.patches.front();
  Eigen::VectorXd u(2), v(2);
  u << 1.2, 2.0;
  v << std::cos(1.1), std::sin(1.1);
  FermiRay ray = normal_frame_ray(P, u, v, 0.9, 1e-3);
  for (double t : {0.0, 0.3, 0.6, 0.9}) {
    RayState st = ray.state_at(t);
    Eigen::MatrixXd g = metric_at(*P->ambient(), {st.chart, st.x});
    Eigen::MatrixXd full(4, 4);
    full.leftCols(3) = st.E;
    full.col(3) = st.v;
    Eigen::MatrixXd gram = full.transpose() * g * full;
    CHECK((gram - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-7);
  }
}

TEST_CASE("generalized Gauss lemma: distance gradient equals the ray velocity") {
  // Great S^2 inside S^4; sigma is recovered by nearest-point search over the
  // patch plus the closed-form ambient distance, then differentiated.
  auto s4 = make_sphere(4);
  PatchPtr P = make_subsphere_patch(s4, 2, 0, "gauss-lemma/S2");
  Eigen::VectorXd u(2), v(2);
  u << 1.3, 0.9;
  v << std::cos(0.7), std::sin(0.7);
  const double t = 0.3;
  FermiRay ray = normal_frame_ray(P, u, v, t + 0.05, 1e-3);
  RayState st = ray.state_at(t);

  auto dist_to_patch = [&](const ChartPoint& q) {
    // Coarse scan then local parabolic refinement in each parameter.
    Eigen::VectorXd best_u = P->domain().lo;
    double best = 1e100;
    const int grid = 40;
    for (int i = 0; i <= grid; ++i)
      for (int j = 0; j <= grid; ++j) {
        Eigen::VectorXd uu(2);
        uu << P->domain().lo[0] + (P->domain().hi[0] - P->domain().lo[0]) * i / grid,
            P->domain().lo[1] + (P->domain().hi[1] - P->domain().lo[1]) * j / grid;
        const double d = s4->distance(q, P->point_at(uu));
        if (d < best) {
          best = d;
          best_u = uu;
        }
      }
    Eigen::VectorXd uu = best_u;
    for (int sweep = 0; sweep < 40; ++sweep) {
      for (int k = 0; k < 2; ++k) {
        const double h = 1e-3 / (sweep + 1);
        Eigen::VectorXd up = uu, um = uu;
        up[k] += h;
        um[k] -= h;
        const double dp = s4->distance(q, P->point_at(up));
        const double dm = s4->distance(q, P->point_at(um));
        const double d0 = s4->distance(q, P->point_at(uu));
        const double denom = dp - 2 * d0 + dm;
        if (std::abs(denom) > 1e-14) uu[k] -= 0.5 * h * (dp - dm) / denom;
      }
    }
    return s4->distance(q, P->point_at(uu));
  };

  // Central differences of sigma in chart coordinates.
  Eigen::VectorXd grad(4);
  const double h = 1e-4;
  for (int k = 0; k < 4; ++k) {
    ChartPoint qp{st.chart, st.x}, qm{st.chart, st.x};
    qp.x[k] += h;
    qm.x[k] -= h;
    grad[k] = (dist_to_patch(qp) - dist_to_patch(qm)) / (2 * h);
  }
  Eigen::MatrixXd g = metric_at(*s4, {st.chart, st.x});
  Eigen::VectorXd grad_sharp = g.llt().solve(grad);
  CHECK((grad_sharp - st.v).cwiseAbs().maxCoeff() < 1e-5);
}

TEST_CASE("energy conservation over 200 random rays per catalog case") {
  Rng rng(2024);
  for (const auto& e : default_catalog({})) {
    PatchPtr P = e.patches.front();
    const double t_max = 0.5 * e.default_t_max;
    for (int r = 0; r < 200; ++r) {
      Eigen::VectorXd unit(P->m());
      for (int k = 0; k < P->m(); ++k) unit[k] = rng.uniform(0.05, 0.95);
      Eigen::VectorXd u = P->domain().lerp(unit);
      Eigen::VectorXd v = rng.unit_vector(P->codim());
      FermiRay ray = normal_frame_ray(P, u, v, t_max, 1e-3);
      for (double t : {0.5 * t_max, t_max}) {
        RayState st = ray.state_at(t);
        Eigen::MatrixXd g = metric_at(*P->ambient(), {st.chart, st.x});
        CHECK(std::abs(st.v.dot(g * st.v) - 1.0) < 1e-8 * t_max);
      }
    }
  }
}

TEST_CASE("ChartExit when a trajectory leaves every chart") {
  auto M = std::make_shared<ChartedManifold>("disc", 2);
  M->add_chart(MetricFn::make(2,
                              [](const auto&, auto& g) { g.set_identity_scaled(1.0); }),
               1.5, 2.0);
  CHECK_THROWS_AS(
      integrate_geodesic(*M, {0, Eigen::Vector2d::Zero()}, Eigen::Vector2d(1, 0), 3.0, 1e-3),
      ChartExit);
}

TEST_CASE("StepFailure when the fixed step cannot resolve the dynamics") {
  // Metric ripple far below the step scale: the halving estimate must trip.
  auto M = std::make_shared<ChartedManifold>("ripple", 2);
  M->add_chart(MetricFn::make(2,
                              [](const auto& x, auto& g) {
                                auto c = 2.0 + sin(x[0] * 1.0e4);
                                g.set_identity_scaled(c);
                              }),
               50.0, 100.0);
  Eigen::MatrixXd g = metric_at(*M, {0, Eigen::Vector2d::Zero()});
  Eigen::Vector2d w(1.0 / std::sqrt(g(0, 0)), 0);
  CHECK_THROWS_AS(integrate_geodesic(*M, {0, Eigen::Vector2d::Zero()}, w, 1.0, 1e-3),
                  StepFailure);
}

TEST_CASE("mixed-direction geodesics in the product metric") {
  auto m = make_s2xr();
  // 45 degrees between the sphere factor and the line: the line coordinate
  // grows with speed cos(45) and the frame stays orthonormal.
  ChartPoint p{0, Eigen::Vector3d::Zero()};
  Eigen::MatrixXd g = metric_at(*m, p);
  Eigen::Vector3d w(0.5 / std::sqrt(2.0), 0, 1.0 / std::sqrt(2.0));
  PathRecord path = integrate_geodesic(*m, p, w, 2.0, 1e-3);
  CHECK(path.last().x[2] == doctest::Approx(2.0 / std::sqrt(2.0)).epsilon(1e-9));
  Eigen::VectorXd y = m->embed({path.last_chart(), path.last().x});
  // Sphere factor advanced by arc length 2 cos(45).
  CHECK(y.head(3).dot(Eigen::Vector3d(0, 0, -1)) ==
        doctest::Approx(std::cos(2.0 / std::sqrt(2.0))).epsilon(1e-8));
}
