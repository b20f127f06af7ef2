#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "tubegeo/verify.hpp"

namespace tubegeo {

// 17-significant-digit decimal text; the profile and report formats pin this.
std::string format_g17(double v);

// Deterministic JSON (ordered keys, canonical double formatting) so identical
// configurations produce byte-identical reports.
std::string report_to_json(const VerificationReport& rep, int indent = 2);
std::string reports_to_json(const std::vector<VerificationReport>& reps, int indent = 2);

// Flat CSV mirror of a report: name,value,tolerance,pass per statistic.
void write_report_csv(std::ostream& os, const VerificationReport& rep);

// Profile rows: t,H,lambda_1..lambda_{n-1},riccati_residual, sorted by t.
void write_profile_csv(std::ostream& os, const std::vector<ShapeSample>& samples);

void write_expansion_csv(std::ostream& os, const MetricExpansionReport& rep);

}  // namespace tubegeo
