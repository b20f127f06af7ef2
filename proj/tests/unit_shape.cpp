#include <cmath>

#include "doctest.h"
#include "tubegeo/catalog.hpp"
#include "tubegeo/sampling.hpp"
#include "tubegeo/shape.hpp"
#include "tubegeo/verify.hpp"

using namespace tubegeo;

TEST_CASE("totally geodesic submanifolds have vanishing shape operator") {
  auto e3 = make_euclidean(3);
  PatchPtr plane = make_hyperplane_patch(e3, "plane");
  Eigen::VectorXd u(2), v(1);
  u << 0.4, -0.9;
  v << 1.0;
  CHECK(shape_of_submanifold(*plane, u, v).cwiseAbs().maxCoeff() < 1e-14);

  auto s4 = make_sphere(4);
  PatchPtr great = make_subsphere_patch(s4, 2, 0, "great-S2");
  Eigen::VectorXd ug(2), vg(2);
  ug << 1.0, 2.2;
  vg << std::cos(0.3), std::sin(0.3);
  CHECK(shape_of_submanifold(*great, ug, vg).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("circle of radius r: T_v = -1/r outward, +1/r inward") {
  auto e2 = make_euclidean(2);
  for (double r : {1.0, 2.5}) {
    PatchPtr circle = make_circle_patch(e2, r, "circle");
    Eigen::VectorXd u(1), out(1), in(1);
    u << 0.8;
    out << 1.0;
    in << -1.0;
    CHECK(shape_of_submanifold(*circle, u, out)(0, 0) == doctest::Approx(-1.0 / r).epsilon(1e-12));
    CHECK(shape_of_submanifold(*circle, u, in)(0, 0) == doctest::Approx(1.0 / r).epsilon(1e-12));
  }
}

TEST_CASE("T_v is symmetric and linear in v") {
  auto e = make_entry("s4-cartan", 0, 0, 0, {});
  PatchPtr P = e.patches.front();
  Rng rng(3);
  Eigen::VectorXd u(2);
  u << 1.2, 1.9;
  for (int i = 0; i < 10; ++i) {
    Eigen::VectorXd a = rng.unit_vector(2), b = rng.unit_vector(2);
    const double al = rng.uniform(-1, 1), be = rng.uniform(-1, 1);
    Eigen::VectorXd c = al * a + be * b;
    const double cn = c.norm();
    if (cn < 0.2) continue;
    Eigen::MatrixXd Ta = shape_of_submanifold(*P, u, a);
    CHECK((Ta - Ta.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    Eigen::MatrixXd Tb = shape_of_submanifold(*P, u, b);
    Eigen::MatrixXd Tc = shape_of_submanifold(*P, u, c / cn);
    CHECK((cn * Tc - (al * Ta + be * Tb)).cwiseAbs().maxCoeff() < 1e-10);
  }
}

TEST_CASE("series coefficients: internal relation B = 3 C^T and trace identity") {
  auto e = make_entry("sn-clifford", 0, 2, 1, {});
  PatchPtr P = e.patches.front();
  Eigen::VectorXd u(2), v(2);
  u << 1.1, 2.7;
  v << std::cos(1.9), std::sin(1.9);
  SeriesCoefficients sc = series_coefficients(*P, u, v);
  CHECK((sc.B - 3.0 * sc.C.transpose()).cwiseAbs().maxCoeff() == 0.0);
  // Tr A + Tr D assembles the same constant as gamma_p.
  CHECK(sc.A.trace() + sc.D.trace() == doctest::Approx(gamma_p(*P, u, v)).epsilon(1e-10));
}

TEST_CASE("series seed: flat point gives exactly -(1/t0) I") {
  auto e = make_entry("euclidean-point", 3, 0, 0, {});
  Eigen::VectorXd u(0);
  Eigen::Vector3d v(0, 1, 0);
  ShapeSample s = series_seed(*e.patches.front(), u, v, 1e-2);
  CHECK((s.S_bar + 100.0 * Eigen::MatrixXd::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("series seed: sphere point matches the Laurent start of -cot") {
  auto e = make_entry("s2-point", 0, 0, 0, {});
  Eigen::VectorXd u(0), v(2);
  v << std::cos(0.6), std::sin(0.6);
  const double t0 = 1e-2;
  ShapeSample s = series_seed(*e.patches.front(), u, v, t0);
  CHECK(s.S_bar(0, 0) == doctest::Approx(-1.0 / t0 + t0 / 3.0).epsilon(1e-10));
}

TEST_CASE("series seed blocks for the clifford focal variety") {
  // Around S^p in S^(p+q+1): T_v = 0, A = I_m, B = C = 0, D = I/3.
  auto e = make_entry("sn-clifford", 0, 1, 2, {});
  PatchPtr P = e.patches.front();
  Eigen::VectorXd u(1), v(3);
  u << 2.0;
  v << 0.2, -0.5, std::sqrt(1.0 - 0.04 - 0.25);
  SeriesCoefficients sc = series_coefficients(*P, u, v);
  CHECK(sc.T_v.cwiseAbs().maxCoeff() < 1e-10);
  CHECK((sc.A - Eigen::MatrixXd::Identity(1, 1)).cwiseAbs().maxCoeff() < 1e-9);
  CHECK(sc.B.cwiseAbs().maxCoeff() < 1e-9);
  CHECK((sc.D - Eigen::MatrixXd::Identity(2, 2) / 3.0).cwiseAbs().maxCoeff() < 1e-9);

  const double t0 = 1e-2;
  ShapeSample s = series_seed(*P, u, v, t0);
  CHECK(s.S_bar(0, 0) == doctest::Approx(t0).epsilon(1e-7));
  CHECK(s.S_bar(1, 1) == doctest::Approx(-1.0 / t0 + t0 / 3.0).epsilon(1e-9));
  CHECK(s.H == doctest::Approx(s.S_bar.trace()));
}

TEST_CASE("immersion failure is detected") {
  auto e2 = make_euclidean(2);
  // Parametrization with a rank drop at u = 0.
  auto bad = SubmanifoldPatch::make(
      e2, "cusp", 1,
      ParamBox{Eigen::VectorXd::Constant(1, -1.0), Eigen::VectorXd::Constant(1, 1.0)},
      [](const Eigen::VectorXd&) { return 0; },
      [](int, const auto& u, auto& x) {
        x[0] = u[0] * u[0];
        x[1] = u[0] * u[0] * u[0];
      },
      [](const auto&, auto& g) { g.set_identity_scaled(1.0); },
      [](int, const Eigen::VectorXd&) { return Eigen::MatrixXd::Zero(2, 1); });
  Eigen::VectorXd u0(1), v(1);
  u0 << 0.0;
  v << 1.0;
  CHECK_THROWS_AS(shape_of_submanifold(*bad, u0, v), ImmersionFailure);
}

TEST_CASE("patch invariants: normal frames are g-orthonormal and g-orthogonal to tangents") {
  Rng rng(7);
  for (const char* name : {"sn-clifford", "s4-cartan", "sn-height-squared"}) {
    auto e = make_entry(name, 4, 1, 2, {});
    for (PatchPtr P : e.patches) {
      if (P->m() == 0) continue;
      for (int i = 0; i < 8; ++i) {
        Eigen::VectorXd unit(P->m());
        for (int k = 0; k < P->m(); ++k) unit[k] = rng.uniform();
        Eigen::VectorXd u = P->domain().lerp(unit);
        ChartPoint p = P->point_at(u);
        Eigen::MatrixXd g = metric_at(*P->ambient(), p);
        Eigen::MatrixXd N = P->normal_frame(u);
        Eigen::MatrixXd T = P->tangent_frame(u);
        CHECK((N.transpose() * g * N - Eigen::MatrixXd::Identity(N.cols(), N.cols()))
                  .cwiseAbs()
                  .maxCoeff() < 1e-10);
        CHECK((N.transpose() * g * T).cwiseAbs().maxCoeff() < 1e-10);
      }
    }
  }
}
