#pragma once

#include <vector>

#include "tubegeo/flows.hpp"

namespace tubegeo {

// Comparison of the numerically built tube metric coefficients against their
// quadratic small-t model along one ray. The coordinate-field analogues are
// Jacobi fields (tangential type) and scaled Jacobi fields (fiber type), so
// g_ab, g_ai, g_ij come from inner products of JacobiFlow columns.
struct MetricExpansionReport {
  std::vector<double> t;
  std::vector<double> remainder;  // max-entry |numeric - model| per t
  double slope = 0;               // log-log fit; meaningful when !exact
  bool exact = false;             // remainder below 1e-9 everywhere (flat-type cases)
  bool pass = false;              // exact, or slope >= min_slope
  double min_slope = 2.7;
};

MetricExpansionReport validate_metric_expansion(const FermiRay& ray,
                                                const std::vector<double>& t_list,
                                                double min_slope = 2.7);

// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace tubegeo
