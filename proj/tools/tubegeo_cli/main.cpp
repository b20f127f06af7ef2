// tubegeo command-line driver: catalog listing, verification suites, tube
// profiles and metric-expansion checks with CSV/JSON reports.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "tubegeo/catalog.hpp"
#include "tubegeo/errors.hpp"
#include "tubegeo/report.hpp"
#include "tubegeo/verify.hpp"

namespace {

using tubegeo::CatalogEntry;
using tubegeo::CatalogOptions;
using tubegeo::SuiteConfig;
using tubegeo::VerificationReport;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

struct CliOptions {
  std::string case_label;
  std::string suite = "all";
  std::string match;
  std::optional<int> n, p, q;
  std::optional<int> base, dirs, steps;
  std::optional<double> t_min, t_max, t0, step, tol;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string format;  // csv|json
  std::string config_path;
  double perturb_cartan = 0.0;
};

// Configuration precedence: flags > config file (JSON) > built-in defaults.
void apply_config_file(const CLI::App& cmd, CliOptions& opt) {
  if (opt.config_path.empty()) return;
  std::ifstream in(opt.config_path);
  if (!in) throw tubegeo::UsageError("cannot open config file: " + opt.config_path);
  nlohmann::json j;
  in >> j;

  auto unset = [&cmd](const std::string& flag) {
    const CLI::Option* o = cmd.get_option_no_throw(flag);
    return o == nullptr || o->count() == 0;
  };
  auto load_int = [&](const char* key, std::optional<int>& slot, const std::string& flag) {
    if (j.contains(key) && unset(flag)) slot = j.at(key).get<int>();
  };
  auto load_dbl = [&](const char* key, std::optional<double>& slot, const std::string& flag) {
    if (j.contains(key) && unset(flag)) slot = j.at(key).get<double>();
  };

  if (j.contains("case") && unset("--case")) opt.case_label = j.at("case").get<std::string>();
  if (j.contains("suite") && unset("--suite")) opt.suite = j.at("suite").get<std::string>();
  load_int("n", opt.n, "--n");
  load_int("p", opt.p, "--p");
  load_int("q", opt.q, "--q");
  load_int("base", opt.base, "--base");
  load_int("dirs", opt.dirs, "--dirs");
  load_int("steps", opt.steps, "--steps");
  load_dbl("t_min", opt.t_min, "--t-min");
  load_dbl("t_max", opt.t_max, "--t-max");
  load_dbl("t0", opt.t0, "--t0");
  load_dbl("step", opt.step, "--step");
  load_dbl("tol", opt.tol, "--tol");
  if (j.contains("seed") && unset("--seed")) opt.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("out") && unset("--out")) opt.out = j.at("out").get<std::string>();
  if (j.contains("format") && unset("--format")) opt.format = j.at("format").get<std::string>();
}

SuiteConfig make_suite_config(const CliOptions& opt) {
  SuiteConfig cfg;
  if (opt.tol && *opt.tol <= 0) throw tubegeo::UsageError("--tol must be positive");
  if (opt.base) cfg.base = *opt.base;
  if (opt.dirs) cfg.dirs = *opt.dirs;
  if (opt.steps) cfg.t_steps = *opt.steps;
  if (opt.t0) cfg.t0 = *opt.t0;
  if (opt.step) cfg.step = *opt.step;
  if (opt.t_min) cfg.t_min = *opt.t_min;
  if (opt.t_max) cfg.t_max = *opt.t_max;
  if (opt.seed) cfg.seed = *opt.seed;
  if (opt.tol) cfg.tol = *opt.tol;
  if (cfg.t0 >= cfg.t_min)
    throw tubegeo::UsageError("t0 must lie below the first t-grid value (t0 < t-min)");
  return cfg;
}

std::string timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t tt = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y%m%d-%H%M%S", std::localtime(&tt));
  return buf;
}

std::string default_out_name(const std::string& case_label, const std::string& suite,
                             const std::string& ext) {
  std::string safe = case_label.empty() ? "all-cases" : case_label;
  for (char& c : safe)
    if (c == '(' || c == ')' || c == ',') c = '_';
  return safe + "-" + suite + "-" + timestamp() + "." + ext;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw tubegeo::UsageError("cannot write output file: " + path);
  out << content;
}

void print_report_line(const VerificationReport& rep) {
  std::printf("[%s] %s / %s", rep.pass ? "PASS" : "FAIL", rep.case_label.c_str(),
              rep.suite.c_str());
  if (!rep.note.empty()) std::printf("  (%s)", rep.note.c_str());
  std::printf("\n");
}

int cmd_catalog_list(const CliOptions& opt) {
  CatalogOptions copts;
  copts.cartan_perturbation = opt.perturb_cartan;
  for (const CatalogEntry& e : tubegeo::default_catalog(copts)) {
    if (!opt.match.empty() && e.label.find(opt.match) == std::string::npos) continue;
    if (!e.gate_ok) {
      std::printf("%-24s GATE-FAILED(cartan-munzner)\n", e.label.c_str());
      continue;
    }
    std::ostringstream line;
    line << e.label;
    line << "  n=" << e.ambient->dim();
    if (e.candidate) {
      line << "  m-=" << e.candidate->focal_minus->m() << " m+=" << e.candidate->focal_plus->m();
      line << "  proper=" << (e.candidate->proper ? "yes" : "no");
    } else {
      line << "  patch m=" << e.patches.front()->m();
    }
    line << "  gates=ok";
    std::printf("%s\n", line.str().c_str());
  }
  return kExitPass;
}

int cmd_verify(const CliOptions& opt) {
  CatalogOptions copts;
  copts.cartan_perturbation = opt.perturb_cartan;
  SuiteConfig cfg = make_suite_config(opt);

  std::vector<CatalogEntry> entries;
  if (opt.case_label.empty()) {
    entries = tubegeo::default_catalog(copts);
  } else {
    entries.push_back(tubegeo::resolve_case(opt.case_label, opt.n, opt.p, opt.q, copts));
  }

  std::vector<VerificationReport> reports;
  for (const CatalogEntry& e : entries) {
    if (opt.suite == "all") {
      for (VerificationReport& r : tubegeo::run_all_suites(e, cfg))
        reports.push_back(std::move(r));
    } else {
      if (!tubegeo::suite_applicable(e, opt.suite)) {
        if (!opt.case_label.empty())
          throw tubegeo::UsageError("suite '" + opt.suite + "' not applicable to case " + e.label);
        continue;
      }
      reports.push_back(tubegeo::run_suite(e, opt.suite, cfg));
    }
  }
  if (reports.empty()) throw tubegeo::UsageError("no applicable case/suite combination");

  for (const auto& r : reports) print_report_line(r);

  const std::string fmt = opt.format.empty() ? "json" : opt.format;
  std::string path = opt.out;
  if (path.empty()) path = default_out_name(opt.case_label, opt.suite, fmt);
  if (fmt == "json") {
    write_file(path, reports.size() == 1 ? tubegeo::report_to_json(reports.front())
                                         : tubegeo::reports_to_json(reports));
  } else if (fmt == "csv") {
    std::ostringstream os;
    for (const auto& r : reports) tubegeo::write_report_csv(os, r);
    write_file(path, os.str());
  } else {
    throw tubegeo::UsageError("unknown format: " + fmt);
  }
  std::printf("report written to %s\n", path.c_str());

  for (const auto& r : reports)
    if (!r.pass) return kExitVerifyFail;
  return kExitPass;
}

int cmd_tube_profile(const CliOptions& opt) {
  if (opt.case_label.empty()) throw tubegeo::UsageError("tube-profile requires --case");
  CatalogOptions copts;
  copts.cartan_perturbation = opt.perturb_cartan;
  CatalogEntry e = tubegeo::resolve_case(opt.case_label, opt.n, opt.p, opt.q, copts);
  if (!e.gate_ok) {
    std::fprintf(stderr, "refused: %s\n", e.gate_note.c_str());
    return kExitVerifyFail;
  }
  SuiteConfig cfg = make_suite_config(opt);
  tubegeo::TubeProfileResult prof = tubegeo::tube_profile(e, cfg);

  const std::string fmt = opt.format.empty() ? "csv" : opt.format;
  std::string path = opt.out;
  if (path.empty()) path = default_out_name(e.label, "tube-profile", fmt);
  std::ostringstream os;
  if (fmt == "csv") {
    tubegeo::write_profile_csv(os, prof.samples);
  } else if (fmt == "json") {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& s : prof.samples) {
      nlohmann::ordered_json r;
      r["t"] = s.t;
      r["H"] = s.H;
      nlohmann::ordered_json ev = nlohmann::ordered_json::array();
      for (long i = 0; i < s.eigenvalues.size(); ++i) ev.push_back(s.eigenvalues[i]);
      r["lambda"] = ev;
      r["riccati_residual"] = s.riccati_residual;
      r["focal"] = s.focal_flag;
      rows.push_back(r);
    }
    nlohmann::ordered_json j;
    j["case"] = e.label;
    j["rows"] = rows;
    if (prof.t0_sensitivity) j["t0_sensitivity"] = *prof.t0_sensitivity;
    os << j.dump(2) << "\n";
  } else {
    throw tubegeo::UsageError("unknown format: " + fmt);
  }
  write_file(path, os.str());
  std::printf("profile written to %s (%zu rows)\n", path.c_str(), prof.samples.size());
  return kExitPass;
}

int cmd_metric_expansion(const CliOptions& opt) {
  if (opt.case_label.empty()) throw tubegeo::UsageError("metric-expansion requires --case");
  CatalogOptions copts;
  copts.cartan_perturbation = opt.perturb_cartan;
  CatalogEntry e = tubegeo::resolve_case(opt.case_label, opt.n, opt.p, opt.q, copts);
  SuiteConfig cfg = make_suite_config(opt);
  VerificationReport rep = tubegeo::run_suite(e, "metric-expansion", cfg);
  print_report_line(rep);

  const std::string fmt = opt.format.empty() ? "json" : opt.format;
  std::string path = opt.out;
  if (path.empty()) path = default_out_name(e.label, "metric-expansion", fmt);
  if (fmt == "json") {
    write_file(path, tubegeo::report_to_json(rep));
  } else if (fmt == "csv") {
    std::ostringstream os;
    tubegeo::write_expansion_csv(os, tubegeo::metric_expansion(e, cfg));
    write_file(path, os.str());
  } else {
    throw tubegeo::UsageError("unknown format: " + fmt);
  }
  std::printf("report written to %s\n", path.c_str());
  return rep.pass ? kExitPass : kExitVerifyFail;
}

void add_common_options(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--case", opt.case_label, "catalog case label, e.g. sn-clifford(1,2)");
  cmd->add_option("--n", opt.n, "ambient dimension parameter");
  cmd->add_option("--p", opt.p, "clifford p");
  cmd->add_option("--q", opt.q, "clifford q");
  cmd->add_option("--base", opt.base, "base-point sample count");
  cmd->add_option("--dirs", opt.dirs, "normal-direction sample count");
  cmd->add_option("--t-min", opt.t_min, "profile range start");
  cmd->add_option("--t-max", opt.t_max, "profile range end");
  cmd->add_option("--steps", opt.steps, "profile t-grid size");
  cmd->add_option("--t0", opt.t0, "Riccati seed parameter");
  cmd->add_option("--step", opt.step, "integrator step");
  cmd->add_option("--tol", opt.tol, "principal tolerance override");
  cmd->add_option("--seed", opt.seed, "sampling seed");
  cmd->add_option("--out", opt.out, "output file (default: case+suite+timestamp)");
  cmd->add_option("--format", opt.format, "csv or json");
  cmd->add_option("--config", opt.config_path, "JSON config file (flags take precedence)");
  cmd->add_option("--perturb-cartan", opt.perturb_cartan,
                  "fault injection: perturb the Cartan cubic to exercise the admission gate");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tubegeo: shape operators of tubes and isoparametric verification suites"};
  app.require_subcommand(1);

  CliOptions opt;
  CLI::App* catalog = app.add_subcommand("catalog", "catalog inspection");
  CLI::App* list = catalog->add_subcommand("list", "list catalog entries");
  list->add_option("--match", opt.match, "substring filter");
  list->add_option("--perturb-cartan", opt.perturb_cartan, "fault injection for the gate");

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", opt.suite,
                     "transnormal|isoparametric|cartan-munzner|minimal-focal|austere|"
                     "curvature-identities|unique-minimal|tube-profile|metric-expansion|all");
  add_common_options(verify, opt);

  CLI::App* profile = app.add_subcommand("tube-profile", "emit a tube profile CSV");
  add_common_options(profile, opt);

  CLI::App* expansion = app.add_subcommand("metric-expansion", "metric expansion check");
  add_common_options(expansion, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? kExitPass : kExitUsage;
  }

  try {
    if (list->parsed()) return cmd_catalog_list(opt);
    if (verify->parsed()) {
      apply_config_file(*verify, opt);
      return cmd_verify(opt);
    }
    if (profile->parsed()) {
      apply_config_file(*profile, opt);
      return cmd_tube_profile(opt);
    }
    if (expansion->parsed()) {
      apply_config_file(*expansion, opt);
      return cmd_metric_expansion(opt);
    }
    return kExitUsage;
  } catch (const tubegeo::UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const tubegeo::Error& e) {
    std::fprintf(stderr, "numerical failure: %s\n", e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  }
}
