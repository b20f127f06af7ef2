#include <cmath>

#include "doctest.h"
#include "tubegeo/catalog.hpp"
#include "tubegeo/verify.hpp"

using namespace tubegeo;

namespace {

SuiteConfig fast_cfg() {
  SuiteConfig cfg;
  cfg.base = 6;
  cfg.dirs = 6;
  cfg.n_samples = 1024;
  return cfg;
}

double stat_value(const VerificationReport& rep, const std::string& needle) {
  for (const Statistic& s : rep.statistics)
    if (s.name.find(needle) != std::string::npos) return s.value;
  FAIL("statistic not found: " << needle);
  return 0;
}

}  // namespace

TEST_CASE("gamma_p closed forms") {
  // Focal point of the height function on S^n: (n-1)/3.
  for (int n : {2, 4}) {
    auto e = make_entry("sn-height", n, 0, 0, {});
    Eigen::VectorXd u(0);
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    v[0] = 1.0;
    CHECK(gamma_p(*e.candidate->focal_minus, u, v) ==
          doctest::Approx((n - 1) / 3.0).epsilon(1e-10));
  }
  // S^p focal variety of the clifford case: (n-1)/3 + 2p/3.
  for (auto [p, q] : {std::pair<int, int>{1, 2}, std::pair<int, int>{2, 1}}) {
    auto e = make_entry("sn-clifford", 0, p, q, {});
    PatchPtr P = e.candidate->focal_minus;  // the S^p block
    Eigen::VectorXd u = P->domain().lerp(Eigen::VectorXd::Constant(p, 0.4));
    Eigen::VectorXd v = Eigen::VectorXd::Zero(q + 1);
    v[q] = 1.0;
    const int n = p + q + 1;
    CHECK(gamma_p(*P, u, v) == doctest::Approx((n - 1) / 3.0 + 2.0 * p / 3.0).epsilon(1e-9));
  }
  // Flat point: 0.
  auto fe = make_entry("euclidean-point", 3, 0, 0, {});
  Eigen::VectorXd u0(0);
  Eigen::Vector3d v3(0, 0, 1);
  CHECK(gamma_p(*fe.patches.front(), u0, v3) == doctest::Approx(0.0));
}

TEST_CASE("minimal-focal suite passes on catalog candidates") {
  SuiteConfig cfg = fast_cfg();
  SUBCASE("clifford: totally geodesic blocks") {
    VerificationReport rep = verify_minimal_focal(make_entry("sn-clifford", 0, 1, 2, {}), cfg);
    CHECK(rep.pass);
    CHECK(stat_value(rep, "max |Trace T_v| (M-)") < 1e-10);
    CHECK(stat_value(rep, "max |Trace T_v| (M+)") < 1e-10);
  }
  SUBCASE("non-proper equator") {
    VerificationReport rep =
        verify_minimal_focal(make_entry("sn-height-squared", 4, 0, 0, {}), cfg);
    CHECK(rep.pass);
    CHECK(stat_value(rep, "max |Trace T_v| (M-)") < 1e-10);
  }
  SUBCASE("cartan veronese: eigenvalues cancel nontrivially") {
    VerificationReport rep = verify_minimal_focal(make_entry("s4-cartan", 0, 0, 0, {}), cfg);
    CHECK(rep.pass);
    CHECK(stat_value(rep, "max |Trace T_v| (M-)") < 1e-6);
    CHECK(stat_value(rep, "max |Trace T_v| (M+)") < 1e-6);
    CHECK(stat_value(rep, "H(") < 1e-5);
  }
  SUBCASE("height function: vacuous for points") {
    VerificationReport rep = verify_minimal_focal(make_entry("sn-height", 4, 0, 0, {}), cfg);
    CHECK(rep.pass);
    CHECK(rep.note.find("vacuous") != std::string::npos);
  }
}

TEST_CASE("austere suite: g=2 and g=3 pass, circle control fails pairing") {
  SuiteConfig cfg = fast_cfg();
  SUBCASE("g=2") {
    VerificationReport rep = verify_austere(make_entry("sn-clifford", 0, 2, 1, {}), cfg);
    CHECK(rep.pass);
  }
  SUBCASE("g=3") {
    VerificationReport rep = verify_austere(make_entry("s4-cartan", 0, 0, 0, {}), cfg);
    CHECK(rep.pass);
    CHECK(stat_value(rep, "eigenvalue spread per sorted position (M+)") < 1e-6);
    CHECK(stat_value(rep, "pairing residual (multiset = -multiset) (M+)") < 1e-6);
    CHECK(stat_value(rep, "branch limits vs T_v eigenvalues (M+)") < 1e-5);
  }
  SUBCASE("negative control: round circle in the plane") {
    auto e2 = make_euclidean(2);
    PatchPtr circle = make_circle_patch(e2, 1.0, "control-circle");
    VerificationReport rep = verify_austere_patch(circle, cfg);
    CHECK(!rep.pass);  // each sample's multiset {-1/r} is not sign-paired
    CHECK(stat_value(rep, "pairing residual") == doctest::Approx(2.0).epsilon(1e-9));
  }
}

TEST_CASE("curvature identities suite on sphere candidates") {
  SuiteConfig cfg = fast_cfg();
  for (const char* name : {"sn-height", "sn-clifford", "s4-cartan", "sn-height-squared"}) {
    VerificationReport rep =
        verify_curvature_identities(make_entry(name, 4, 1, 2, {}), cfg);
    CHECK(rep.pass);
  }
}

TEST_CASE("eq 7 value cross-check by constant-curvature substitution (g=2)") {
  // LHS = q(q+1)/3 + p(p-1) + p(q+1) - p(p-1) and (n-m) Gamma_P agree.
  const int p = 1, q = 2, n = p + q + 1;
  auto e = make_entry("sn-clifford", 0, p, q, {});
  SuiteConfig cfg = fast_cfg();
  VerificationReport rep = verify_curvature_identities(e, cfg);
  CHECK(rep.pass);
  const double gamma = (n - 1) / 3.0 + 2.0 * p / 3.0;
  const double lhs = q * (q + 1) / 3.0 + p * (q + 1);
  CHECK(lhs == doctest::Approx((n - p) * gamma).epsilon(1e-12));
}

TEST_CASE("eq 8 numbers for the non-proper equator of S^4") {
  // R^N = n(n-1) = 12, Ricci(nu,nu) = n-1 = 3, R^P = (n-1)(n-2) = 6,
  // Gamma_P = (1/3)(3 + 2*3 + 0) = 3; equality 12 - 3 - 6 = 3.
  auto e = make_entry("sn-height-squared", 4, 0, 0, {});
  PatchPtr P = e.candidate->focal_minus;
  Eigen::VectorXd u = P->domain().lerp(Eigen::VectorXd::Constant(3, 0.4));
  Eigen::VectorXd nu(1);
  nu << 1.0;
  const double gamma = gamma_p(*P, u, nu);
  CHECK(gamma == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(riemann_at(*P->intrinsic(), {0, u}).scalar == doctest::Approx(6.0).epsilon(1e-9));
  BaseFrames f = base_frames(*P, u, nu);
  CurvaturePacket pk = riemann_at(*e.ambient, f.p);
  CHECK(pk.scalar == doctest::Approx(12.0).epsilon(1e-9));
  CHECK(f.v.dot(pk.ricci * f.v) == doctest::Approx(3.0).epsilon(1e-9));
}

TEST_CASE("unique-minimal suite outcomes per case class") {
  SuiteConfig cfg = fast_cfg();
  SUBCASE("positive-Ricci proper cases pass with one zero") {
    for (const char* name : {"sn-height", "sn-clifford", "s2-point"}) {
      VerificationReport rep = verify_unique_minimal(make_entry(name, 4, 1, 2, {}), cfg);
      CHECK(rep.pass);
    }
  }
  SUBCASE("flat control fails with NoZero") {
    VerificationReport rep = verify_unique_minimal(make_entry("euclidean-point", 3, 0, 0, {}), cfg);
    CHECK(!rep.pass);
    CHECK(rep.note == "NoZero");
  }
  SUBCASE("non-proper case: no zero expected, suite passes") {
    VerificationReport rep =
        verify_unique_minimal(make_entry("sn-height-squared", 4, 0, 0, {}), cfg);
    CHECK(rep.pass);
    CHECK(rep.note.find("non-proper") != std::string::npos);
  }
}

TEST_CASE("tube-profile and metric-expansion suites pass on all catalog entries") {
  SuiteConfig cfg = fast_cfg();
  cfg.t_steps = 12;
  for (const auto& e : default_catalog({})) {
    VerificationReport prof = verify_tube_profile(e, cfg);
    CHECK_MESSAGE(prof.pass, e.label);
    VerificationReport exp = verify_metric_expansion(e, cfg);
    CHECK_MESSAGE(exp.pass, e.label);
  }
}

TEST_CASE("suite dispatch and applicability") {
  auto e = make_entry("euclidean-point", 3, 0, 0, {});
  CHECK(!suite_applicable(e, "transnormal"));
  CHECK(suite_applicable(e, "tube-profile"));
  CHECK_THROWS_AS(run_suite(e, "no-such-suite", {}), UsageError);
  CHECK_THROWS_AS(check_transnormal(e, {}), UsageError);

  auto cartan = make_entry("s4-cartan", 0, 0, 0, {});
  CHECK(suite_applicable(cartan, "cartan-munzner"));
  auto clifford = make_entry("sn-clifford", 0, 1, 2, {});
  CHECK(!suite_applicable(clifford, "cartan-munzner"));
}
