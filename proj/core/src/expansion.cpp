#include "tubegeo/expansion.hpp"

#include <cmath>

#include "tubegeo/errors.hpp"

namespace tubegeo {

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  return (n * sxy - sx * sy) / denom;
}

MetricExpansionReport validate_metric_expansion(const FermiRay& ray,
                                                const std::vector<double>& t_list,
                                                double min_slope) {
  const int n = ray.ambient().dim();
  const int m = ray.patch().m();
  const int fdim = n - m - 1;

  SeriesCoefficients sc = series_coefficients(ray.patch(), ray.u(), ray.v_coeffs());
  // g_ab quadratic coefficient: -<R_{va}v,b> + (T^2)_ab = -A + 2 T^2.
  const Eigen::MatrixXd quad_ab = -sc.A + 2.0 * sc.T_v * sc.T_v;
  JacobiFlow flow(ray);

  MetricExpansionReport rep;
  rep.min_slope = min_slope;
  for (double t : t_list) {
    auto [Y, Yp] = flow.fundamental_at(t);
    (void)Yp;
    // Column blocks: J_a (a < m) are the tangential coordinate fields, the
    // fiber coordinate fields are K_i / t.
    double worst = 0;
    for (int a = 0; a < m; ++a)
      for (int b = a; b < m; ++b) {
        const double num = Y.col(a).dot(Y.col(b));
        const double model =
            (a == b ? 1.0 : 0.0) - 2.0 * sc.T_v(a, b) * t + quad_ab(a, b) * t * t;
        worst = std::max(worst, std::abs(num - model));
      }
    for (int a = 0; a < m; ++a)
      for (int i = 0; i < fdim; ++i) {
        const double num = Y.col(a).dot(Y.col(m + i)) / t;
        const double model = -(2.0 / 3.0) * sc.B(a, i) * t * t;
        worst = std::max(worst, std::abs(num - model));
      }
    for (int i = 0; i < fdim; ++i)
      for (int j = i; j < fdim; ++j) {
        const double num = Y.col(m + i).dot(Y.col(m + j)) / (t * t);
        const double model = (i == j ? 1.0 : 0.0) - sc.D(i, j) * t * t;
        worst = std::max(worst, std::abs(num - model));
      }
    rep.t.push_back(t);
    rep.remainder.push_back(worst);
  }

  double max_rem = 0;
  for (double r : rep.remainder) max_rem = std::max(max_rem, r);
  if (max_rem < 1e-9) {
    rep.exact = true;
    rep.pass = true;
    return rep;
  }

  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < rep.t.size(); ++i) {
    if (rep.remainder[i] > 1e-13) {
      xs.push_back(rep.t[i]);
      ys.push_back(rep.remainder[i]);
    }
  }
  if (xs.size() < 4)
    throw FitFailure("validate_metric_expansion: fewer than 4 usable t values");
  rep.slope = log_log_slope(xs, ys);
  rep.pass = rep.slope >= min_slope;
  return rep;
}

}  // namespace tubegeo
