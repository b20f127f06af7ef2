#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tubegeo/branches.hpp"
#include "tubegeo/catalog.hpp"
#include "tubegeo/expansion.hpp"

namespace tubegeo {

// One named check inside a report; tolerance <= 0 marks an informational
// value that does not gate the pass flag.
struct Statistic {
  std::string name;
  double value = 0;
  double tolerance = 0;
  bool pass = true;
  std::string note;
};

struct Provenance {
  std::uint64_t seed = 1736;
  double t0 = 1e-2;
  double step = 1e-3;
  int base = 32, dirs = 16, t_steps = 30;
  double t_min = 0.1, t_max = 0;
  std::string gate_note;
};

struct ProfileBin {
  double f_center = 0;
  double value = 0;
  int count = 0;
  double residual = 0;
};

struct VerificationReport {
  std::string case_label;
  std::string suite;
  std::vector<Statistic> statistics;
  bool pass = true;
  std::string note;
  Provenance prov;
  std::vector<ProfileBin> profile;  // binned b/a profile where applicable

  void add(const std::string& name, double value, double tolerance, const std::string& note = "");
  void add_info(const std::string& name, double value, const std::string& note = "");
};

struct SuiteConfig {
  int base = 32, dirs = 16, t_steps = 30;
  int n_samples = 4096;  // ambient samples for the transnormal/isoparametric bins
  double t0 = 1e-2;
  double step = 1e-3;
  double t_min = 0.1;
  std::optional<double> t_max;  // defaults to the entry's safe tube range
  std::uint64_t seed = 1736;
  std::optional<double> tol;  // overrides the suite's principal tolerance
};

// Gamma_P = (1/3)(ricci(v,v) + 2 sum_a K(v, X_a) + 3 |T_v|^2), the constant
// of the focal trace identity.
double gamma_p(const SubmanifoldPatch& P, const Eigen::VectorXd& u,
               const Eigen::VectorXd& v_coeffs);

VerificationReport check_transnormal(const CatalogEntry& e, const SuiteConfig& cfg = {});
VerificationReport check_isoparametric(const CatalogEntry& e, const SuiteConfig& cfg = {});
VerificationReport check_cartan_gate(const CatalogEntry& e, const SuiteConfig& cfg = {});
VerificationReport verify_minimal_focal(const CatalogEntry& e, const SuiteConfig& cfg = {});
VerificationReport verify_austere(const CatalogEntry& e, const SuiteConfig& cfg = {});
// Patch-level austerity check; used by the entry suite and directly as a
// negative control on non-focal submanifolds.
VerificationReport verify_austere_patch(PatchPtr patch, const SuiteConfig& cfg = {});
VerificationReport verify_curvature_identities(const CatalogEntry& e, const SuiteConfig& cfg = {});
VerificationReport verify_unique_minimal(const CatalogEntry& e, const SuiteConfig& cfg = {});
VerificationReport verify_tube_profile(const CatalogEntry& e, const SuiteConfig& cfg = {});
VerificationReport verify_metric_expansion(const CatalogEntry& e, const SuiteConfig& cfg = {});

struct TubeProfileResult {
  std::vector<ShapeSample> samples;
  std::optional<double> focal_t;
  std::optional<double> t0_sensitivity;
  int n_dim = 0;
};
TubeProfileResult tube_profile(const CatalogEntry& e, const SuiteConfig& cfg = {});
MetricExpansionReport metric_expansion(const CatalogEntry& e, const SuiteConfig& cfg = {});

const std::vector<std::string>& suite_names();
bool suite_applicable(const CatalogEntry& e, const std::string& suite);
VerificationReport run_suite(const CatalogEntry& e, const std::string& suite,
                             const SuiteConfig& cfg = {});
std::vector<VerificationReport> run_all_suites(const CatalogEntry& e, const SuiteConfig& cfg = {});

}  // namespace tubegeo
