#include <cmath>

#include "doctest.h"
#include "tubegeo/catalog.hpp"
#include "tubegeo/curvature.hpp"
#include "tubegeo/jets.hpp"
#include "tubegeo/sampling.hpp"
#include "tubegeo/verify.hpp"

using namespace tubegeo;

namespace {

// Evaluates the binned profile against a closed-form b or a.
void check_profile(const VerificationReport& rep, double (*expect)(double), double tol) {
  REQUIRE(!rep.profile.empty());
  int checked = 0;
  for (const ProfileBin& bin : rep.profile) {
    if (bin.count < 8) continue;
    CHECK(bin.value == doctest::Approx(expect(bin.f_center)).epsilon(tol));
    ++checked;
  }
  CHECK(checked > 40);
}

}  // namespace

TEST_CASE("transnormal profiles match closed forms") {
  SuiteConfig cfg;
  cfg.n_samples = 4096;

  SUBCASE("height: b(s) = 1 - s^2") {
    auto e = make_entry("sn-height", 4, 0, 0, {});
    VerificationReport rep = check_transnormal(e, cfg);
    CHECK(rep.pass);
    CHECK(rep.statistics.front().value < 1e-8);
    check_profile(rep, [](double s) { return 1.0 - s * s; }, 1e-9);
  }
  SUBCASE("height squared: b(s) = 4 s (1 - s)") {
    auto e = make_entry("sn-height-squared", 4, 0, 0, {});
    VerificationReport rep = check_transnormal(e, cfg);
    CHECK(rep.pass);
    check_profile(rep, [](double s) { return 4.0 * s * (1.0 - s); }, 1e-9);
  }
  SUBCASE("clifford: b(s) = 4 s (1 - s)") {
    auto e = make_entry("sn-clifford", 0, 1, 2, {});
    VerificationReport rep = check_transnormal(e, cfg);
    CHECK(rep.pass);
    check_profile(rep, [](double s) { return 4.0 * s * (1.0 - s); }, 1e-9);
  }
  SUBCASE("cartan cubic: b(s) = 9 (1 - s^2)") {
    auto e = make_entry("s4-cartan", 0, 0, 0, {});
    VerificationReport rep = check_transnormal(e, cfg);
    CHECK(rep.pass);
    check_profile(rep, [](double s) { return 9.0 * (1.0 - s * s); }, 1e-9);
  }
}

TEST_CASE("isoparametric profiles match closed forms") {
  SuiteConfig cfg;
  cfg.n_samples = 4096;

  SUBCASE("height on S^4: a(s) = -4 s") {
    auto e = make_entry("sn-height", 4, 0, 0, {});
    VerificationReport rep = check_isoparametric(e, cfg);
    CHECK(rep.pass);
    check_profile(rep, [](double s) { return -4.0 * s; }, 1e-8);
  }
  SUBCASE("height squared on S^4: a(s) = 2 - 10 s") {
    auto e = make_entry("sn-height-squared", 4, 0, 0, {});
    VerificationReport rep = check_isoparametric(e, cfg);
    CHECK(rep.pass);
    check_profile(rep, [](double s) { return 2.0 - 10.0 * s; }, 1e-8);
  }
  SUBCASE("cartan cubic on S^4: a(s) = -18 s (degree-3 harmonic)") {
    auto e = make_entry("s4-cartan", 0, 0, 0, {});
    VerificationReport rep = check_isoparametric(e, cfg);
    CHECK(rep.pass);
    check_profile(rep, [](double s) { return -18.0 * s; }, 1e-7);
  }
}

TEST_CASE("candidate invariants: f extremal with vanishing gradient on focal patches") {
  Rng rng(77);
  for (const char* name : {"sn-height", "sn-height-squared", "sn-clifford", "s4-cartan"}) {
    auto e = make_entry(name, 4, 1, 2, {});
    const auto& cand = *e.candidate;
    for (auto [patch, value] : {std::pair<PatchPtr, double>{cand.focal_minus, cand.f_min},
                                std::pair<PatchPtr, double>{cand.focal_plus, cand.f_max}}) {
      for (int i = 0; i < 6; ++i) {
        Eigen::VectorXd unit(patch->m());
        for (int k = 0; k < patch->m(); ++k) unit[k] = rng.uniform();
        Eigen::VectorXd u = patch->m() > 0 ? patch->domain().lerp(unit) : Eigen::VectorXd(0);
        ChartPoint p = patch->point_at(u);
        ScalarJet jet = scalar_jet(cand.f, p.chart, p.x);
        CHECK(std::abs(jet.f - value) < 1e-10);
        Eigen::MatrixXd g = metric_at(*e.ambient, p);
        Eigen::VectorXd grad_sharp = g.llt().solve(jet.grad);
        CHECK(std::sqrt(grad_sharp.dot(g * grad_sharp)) < 1e-8);
      }
    }
  }
}

TEST_CASE("cartan-munzner gate: exact cubic passes, corrupted cubic is rejected") {
  CartanGateResult good = verify_cartan_munzner(make_cartan_cubic(), 3, 1000, 42);
  CHECK(good.pass);
  CHECK(good.grad_residual < 1e-10);
  CHECK(good.lap_residual < 1e-10);
  CHECK(std::abs(good.fitted_c) < 1e-10);

  CartanGateResult bad = verify_cartan_munzner(make_cartan_cubic(1e-6), 3, 1000, 42);
  CHECK(!bad.pass);

  CatalogOptions opts;
  opts.cartan_perturbation = 1e-6;
  CatalogEntry e = make_entry("s4-cartan", 0, 0, 0, opts);
  CHECK(!e.gate_ok);
  CHECK(e.gate_note.find("GATE-FAILED") != std::string::npos);
  // The suite refuses to run on a gate-failed entry.
  VerificationReport rep = run_suite(e, "austere", {});
  CHECK(!rep.pass);
  CHECK(rep.note.find("refused") != std::string::npos);
}

TEST_CASE("gate identities for degree 1 and degree 2 polynomials") {
  // F = x_n: |grad|^2 = 1, laplacian 0.
  PolyFn lin = PolyFn::make(4, 1, [](const auto& y) { return y[3]; });
  CartanGateResult g1 = verify_cartan_munzner(lin, 1, 500, 3);
  CHECK(g1.pass);
  CHECK(std::abs(g1.fitted_c) < 1e-12);

  // F = sum_{i<=p} x_i^2 - sum_{j>p} x_j^2 on R^4 (p+1 = 2):
  // |grad|^2 = 4 |x|^2, laplacian = 2(p+1) - 2(q+1) = 0 here.
  PolyFn quad = PolyFn::make(4, 2, [](const auto& y) {
    return y[0] * y[0] + y[1] * y[1] - y[2] * y[2] - y[3] * y[3];
  });
  CartanGateResult g2 = verify_cartan_munzner(quad, 2, 500, 3);
  CHECK(g2.pass);
  CHECK(std::abs(g2.fitted_c) < 1e-12);

  // Unequal blocks: laplacian = 2(p+1) - 2(q+1) = constant = c |x|^0.
  PolyFn quad2 = PolyFn::make(4, 2, [](const auto& y) {
    return y[0] * y[0] + y[1] * y[1] + y[2] * y[2] - y[3] * y[3];
  });
  CartanGateResult g3 = verify_cartan_munzner(quad2, 2, 500, 3);
  CHECK(g3.pass);
  CHECK(g3.fitted_c == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("catalog construction and parameter validation") {
  auto entries = default_catalog({});
  CHECK(entries.size() == 8);
  for (const auto& e : entries) {
    CHECK(e.gate_ok);
    CHECK(!e.patches.empty());
  }
  CHECK_THROWS_AS(make_entry("sn-clifford", 0, 0, 2, {}), UsageError);
  CHECK_THROWS_AS(make_entry("nope", 3, 0, 0, {}), UsageError);
  CHECK_THROWS_AS(make_entry("sn-height", 1, 0, 0, {}), UsageError);

  CatalogEntry byLabel = resolve_case("sn-clifford(2,1)", {}, {}, {}, {});
  CHECK(byLabel.label == "sn-clifford(2,1)");
  CatalogEntry byFlag = resolve_case("sn-height", 2, {}, {}, {});
  CHECK(byFlag.label == "sn-height(2)");
}

TEST_CASE("intrinsic geometry via the pullback chart") {
  // Veronese surface: isometric to a sphere of radius sqrt(3), so the
  // intrinsic scalar curvature must be 2/3.
  auto e = make_entry("s4-cartan", 0, 0, 0, {});
  for (PatchPtr P : e.patches) {
    Eigen::VectorXd u(2);
    u << 1.3, 2.4;
    CurvaturePacket pk = riemann_at(*P->intrinsic(), ChartPoint{0, u});
    CHECK(pk.scalar == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  }

  // Equator S^3 inside S^4: unit round, scalar curvature 6.
  auto eq = make_entry("sn-height-squared", 4, 0, 0, {});
  PatchPtr equator = eq.candidate->focal_minus;
  Eigen::VectorXd u3(3);
  u3 << 1.1, 1.9, 2.8;
  CHECK(riemann_at(*equator->intrinsic(), ChartPoint{0, u3}).scalar ==
        doctest::Approx(6.0).epsilon(1e-9));
}
