#include "tubegeo/report.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"

namespace tubegeo {

using ordered_json = nlohmann::ordered_json;

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

ordered_json stat_json(const Statistic& s) {
  ordered_json j;
  j["name"] = s.name;
  j["value"] = s.value;
  if (s.tolerance > 0) {
    j["tolerance"] = s.tolerance;
    j["pass"] = s.pass;
  } else {
    j["informational"] = true;
  }
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

ordered_json report_json(const VerificationReport& rep) {
  ordered_json j;
  j["case"] = rep.case_label;
  j["suite"] = rep.suite;
  j["pass"] = rep.pass;
  if (!rep.note.empty()) j["note"] = rep.note;
  ordered_json stats = ordered_json::array();
  for (const Statistic& s : rep.statistics) stats.push_back(stat_json(s));
  j["statistics"] = stats;
  ordered_json prov;
  prov["seed"] = rep.prov.seed;
  prov["t0"] = rep.prov.t0;
  prov["step"] = rep.prov.step;
  prov["base"] = rep.prov.base;
  prov["dirs"] = rep.prov.dirs;
  prov["t_steps"] = rep.prov.t_steps;
  prov["t_min"] = rep.prov.t_min;
  prov["t_max"] = rep.prov.t_max;
  if (!rep.prov.gate_note.empty()) prov["gate"] = rep.prov.gate_note;
  j["provenance"] = prov;
  if (!rep.profile.empty()) {
    ordered_json bins = ordered_json::array();
    for (const ProfileBin& b : rep.profile) {
      ordered_json bj;
      bj["f"] = b.f_center;
      bj["value"] = b.value;
      bj["count"] = b.count;
      bj["residual"] = b.residual;
      bins.push_back(bj);
    }
    j["profile"] = bins;
  }
  return j;
}

}  // namespace

std::string report_to_json(const VerificationReport& rep, int indent) {
  return report_json(rep).dump(indent) + "\n";
}

std::string reports_to_json(const std::vector<VerificationReport>& reps, int indent) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reps) arr.push_back(report_json(r));
  ordered_json j;
  j["reports"] = arr;
  bool all = true;
  for (const auto& r : reps) all = all && r.pass;
  j["pass"] = all;
  return j.dump(indent) + "\n";
}

void write_report_csv(std::ostream& os, const VerificationReport& rep) {
  os << "case,suite,name,value,tolerance,pass\n";
  for (const Statistic& s : rep.statistics) {
    os << rep.case_label << ',' << rep.suite << ',' << '"' << s.name << '"' << ','
       << format_g17(s.value) << ',';
    if (s.tolerance > 0)
      os << format_g17(s.tolerance) << ',' << (s.pass ? "1" : "0");
    else
      os << "," << "1";
    os << '\n';
  }
}

void write_profile_csv(std::ostream& os, const std::vector<ShapeSample>& samples) {
  if (samples.empty()) return;
  std::vector<const ShapeSample*> rows;
  for (const auto& s : samples) rows.push_back(&s);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ShapeSample* a, const ShapeSample* b) { return a->t < b->t; });
  const long nl = rows.front()->eigenvalues.size();
  os << "t,H";
  for (long i = 1; i <= nl; ++i) os << ",lambda_" << i;
  os << ",riccati_residual\n";
  for (const ShapeSample* s : rows) {
    os << format_g17(s->t) << ',' << format_g17(s->H);
    for (long i = 0; i < nl; ++i) os << ',' << format_g17(s->eigenvalues[i]);
    os << ',' << format_g17(s->riccati_residual) << '\n';
  }
}

void write_expansion_csv(std::ostream& os, const MetricExpansionReport& rep) {
  os << "t,remainder\n";
  for (std::size_t i = 0; i < rep.t.size(); ++i)
    os << format_g17(rep.t[i]) << ',' << format_g17(rep.remainder[i]) << '\n';
}

}  // namespace tubegeo
