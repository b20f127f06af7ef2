#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tubegeo/chart.hpp"
#include "tubegeo/sampling.hpp"
#include "tubegeo/submanifold.hpp"

namespace tubegeo {

// A transnormal/isoparametric candidate: a scalar field on the ambient chart
// manifold together with its closed-form focal varieties. Focal patches come
// from the catalog, never from numerically extremizing f.
struct IsoparametricCandidate {
  ScalarFn f;
  double f_min = 0, f_max = 0;
  PatchPtr focal_minus, focal_plus;
  bool proper = true;
  std::function<ChartPoint(Rng&)> sample_point;
  // Present when f is the sphere restriction of a homogeneous polynomial.
  std::optional<PolyFn> cm_polynomial;
  int cm_degree = 0;
};

struct CatalogEntry {
  std::string label;
  ManifoldPtr ambient;
  std::vector<PatchPtr> patches;  // tube bases; patches[0] drives profiles
  std::optional<IsoparametricCandidate> candidate;
  bool positive_ricci = false;
  bool constant_principal_curvatures = false;
  double default_t_max = 1.0;  // safely below the first focal distance
  bool gate_ok = true;
  std::string gate_note = "ok";
};

struct CatalogOptions {
  // Fault injection: adds eps * x1^2 x2 to the Cartan cubic so the admission
  // gate must reject the entry.
  double cartan_perturbation = 0.0;
  std::uint64_t gate_seed = 20240901;
  int gate_points = 1000;
};

// Ambient manifolds.
ManifoldPtr make_euclidean(int n);
ManifoldPtr make_sphere(int n);   // unit round sphere, two stereographic charts
ManifoldPtr make_s2xr();          // unit 2-sphere times a line

// Standalone patches used by tests and entries.
PatchPtr make_point_patch(ManifoldPtr M, const ChartPoint& p, const std::string& label);
PatchPtr make_hyperplane_patch(ManifoldPtr euclid, const std::string& label);
PatchPtr make_circle_patch(ManifoldPtr euclid2, double radius, const std::string& label);
// Great subsphere of S^n spanned by coordinates [block_start, block_start+p].
PatchPtr make_subsphere_patch(ManifoldPtr sphere, int p, int block_start,
                              const std::string& label);
PatchPtr make_veronese_patch(ManifoldPtr s4, int sign, const std::string& label);

// Cartan-Munzner admission gate: checks |grad F|^2 = g^2 |x|^(2g-2) and
// Delta F = c |x|^(g-2) (c fitted) at random points.
struct CartanGateResult {
  bool pass = false;
  double grad_residual = 0;
  double lap_residual = 0;
  double fitted_c = 0;
};
CartanGateResult verify_cartan_munzner(const PolyFn& F, int g_deg, int n_points,
                                       std::uint64_t seed);

// The Cartan isoparametric cubic on R^5 (trace-form model), optionally
// perturbed for gate fault-injection tests.
PolyFn make_cartan_cubic(double perturbation = 0.0);

// Entry constructors; UsageError on bad parameters or unknown names.
CatalogEntry make_entry(const std::string& name, int n, int p, int q,
                        const CatalogOptions& opts = {});

// Default instances, in listing order.
std::vector<CatalogEntry> default_catalog(const CatalogOptions& opts = {});

// Resolves "name" or "name(args)" against defaults or explicit parameters.
CatalogEntry resolve_case(const std::string& label, std::optional<int> n, std::optional<int> p,
                          std::optional<int> q, const CatalogOptions& opts = {});

}  // namespace tubegeo
