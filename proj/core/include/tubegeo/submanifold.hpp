#pragma once

#include <Eigen/Dense>
#include <functional>
#include <memory>
#include <string>
#include <utility>

#include "tubegeo/chart.hpp"
#include "tubegeo/jets.hpp"

namespace tubegeo {

struct ParamBox {
  Eigen::VectorXd lo, hi;
  int dim() const { return static_cast<int>(lo.size()); }
  Eigen::VectorXd lerp(const Eigen::VectorXd& unit) const {
    return lo + (hi - lo).cwiseProduct(unit);
  }
};

// Parametrized embedded submanifold P of a charted ambient manifold, with a
// closed-form g-orthonormal normal frame. Immutable; evaluation is pure.
class SubmanifoldPatch {
 public:
  using ChartSelector = std::function<int(const Eigen::VectorXd&)>;
  using NormalFrameFn = std::function<Eigen::MatrixXd(int, const Eigen::VectorXd&)>;

  // param and ambient_metric are generic functors (templated call operator)
  // so the pullback metric of the patch can be differentiated to the depth
  // intrinsic curvature requires.
  template <class ParamF, class AmbientMetricF>
  static std::shared_ptr<SubmanifoldPatch> make(ManifoldPtr ambient, std::string label, int m,
                                                ParamBox domain, ChartSelector chart_of,
                                                ParamF param, AmbientMetricF ambient_metric,
                                                NormalFrameFn normal_frame);

  const ManifoldPtr& ambient() const { return ambient_; }
  const std::string& label() const { return label_; }
  int m() const { return m_; }
  int ambient_dim() const { return ambient_->dim(); }
  int codim() const { return ambient_->dim() - m_; }
  const ParamBox& domain() const { return domain_; }

  int chart_of(const Eigen::VectorXd& u) const { return chart_of_(u); }
  ChartPoint point_at(const Eigen::VectorXd& u) const;
  // Jacobian and second derivatives of the parametrization at u, in chart_of(u).
  ParamJet jet_at(const Eigen::VectorXd& u) const;
  // Columns: m tangent vectors (Jacobian columns, not orthonormalized).
  Eigen::MatrixXd tangent_frame(const Eigen::VectorXd& u) const;
  // Columns: n-m g-orthonormal normals, g-orthogonal to the tangent frame.
  Eigen::MatrixXd normal_frame(const Eigen::VectorXd& u) const;

  // Intrinsic geometry of P as a chart manifold over the parameter box
  // (pullback metric); empty for m = 0.
  ManifoldPtr intrinsic() const { return intrinsic_; }

 private:
  SubmanifoldPatch() = default;

  ManifoldPtr ambient_;
  std::string label_;
  int m_ = 0;
  ParamBox domain_;
  ChartSelector chart_of_;
  ParamFn param_;
  NormalFrameFn normal_frame_;
  ManifoldPtr intrinsic_;
};

using PatchPtr = std::shared_ptr<const SubmanifoldPatch>;

// Frames at a base point of a ray: g-orthonormalized tangent frame, the
// normal complement of v (Gram-Schmidt seeded by the catalog normal frame,
// processed in order), and v itself last. This ordering is shared by the
// series expansion and the transported ray frame.
struct BaseFrames {
  ChartPoint p;
  Eigen::MatrixXd g;
  Eigen::MatrixXd tangent;            // n x m, orthonormal
  Eigen::MatrixXd tangent_raw;        // n x m, Jacobian columns
  Eigen::MatrixXd normal;             // n x (n-m), catalog frame
  Eigen::MatrixXd normal_complement;  // n x (n-m-1)
  Eigen::VectorXd v;                  // n
  Eigen::MatrixXd frame;              // n x n columns [tangent | complement | v]
};

BaseFrames base_frames(const SubmanifoldPatch& P, const Eigen::VectorXd& u,
                       const Eigen::VectorXd& v_coeffs);

// Modified Gram-Schmidt in the metric G; throws ImmersionFailure when the
// columns are dependent (residual below tol).
Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& G, const Eigen::MatrixXd& cols,
                               double tol = 1e-10);

// --- template implementation -------------------------------------------------

namespace detail {

template <class ParamF, class AmbientMetricF>
struct PullbackMetric {
  ParamF param;
  AmbientMetricF metric;
  SubmanifoldPatch::ChartSelector chart_of;
  int m, n;

  template <class S>
  void operator()(const Vec<S>& u, Mat<S>& h) const {
    Eigen::VectorXd u0(m);
    for (int i = 0; i < m; ++i) u0[i] = value(u[i]);
    const int chart = chart_of(u0);

    // x = param(u), J = d param / d u via one more dual level.
    Vec<S> x(n);
    Mat<S> J(n, m);
    {
      Vec<Dual<S>> ud(m), xd(n);
      for (int a = 0; a < m; ++a) {
        for (int i = 0; i < m; ++i) ud[i] = Dual<S>(u[i], S(0.0));
        ud[a].b = S(1.0);
        param(chart, ud, xd);
        for (int k = 0; k < n; ++k) {
          if (a == 0) x[k] = xd[k].a;
          J(k, a) = xd[k].b;
        }
      }
    }
    Mat<S> G(n, n);
    metric(x, G);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) {
        S s(0.0);
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) s += J(k, a) * G(k, l) * J(l, b);
        h(a, b) = s;
      }
  }
};

}  // namespace detail

template <class ParamF, class AmbientMetricF>
std::shared_ptr<SubmanifoldPatch> SubmanifoldPatch::make(ManifoldPtr ambient, std::string label,
                                                         int m, ParamBox domain,
                                                         ChartSelector chart_of, ParamF param,
                                                         AmbientMetricF ambient_metric,
                                                         NormalFrameFn normal_frame) {
  auto patch = std::shared_ptr<SubmanifoldPatch>(new SubmanifoldPatch());
  const int n = ambient->dim();
  patch->ambient_ = std::move(ambient);
  patch->label_ = std::move(label);
  patch->m_ = m;
  patch->domain_ = std::move(domain);
  patch->chart_of_ = chart_of;
  patch->param_ = ParamFn::make(m, n, param);
  patch->normal_frame_ = std::move(normal_frame);

  if (m > 0) {
    detail::PullbackMetric<ParamF, AmbientMetricF> pull{param, ambient_metric, chart_of, m, n};
    auto intrinsic = std::make_shared<ChartedManifold>(patch->label_ + "/intrinsic", m);
    const double r = patch->domain_.lo.norm() + patch->domain_.hi.norm() + 10.0;
    intrinsic->add_chart(MetricFn::make(m, pull), r, r);
    patch->intrinsic_ = intrinsic;
  }
  return patch;
}

}  // namespace tubegeo
