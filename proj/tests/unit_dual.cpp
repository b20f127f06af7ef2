#include "doctest.h"
#include "tubegeo/dual.hpp"
#include "tubegeo/functor.hpp"
#include "tubegeo/jets.hpp"

using namespace tubegeo;

namespace {

// f(x, y) = x^2 y + sin(x) exp(y); closed-form derivatives for the oracle.
template <class S>
S test_scalar(const Vec<S>& x) {
  return x[0] * x[0] * x[1] + sin(x[0]) * exp(x[1]);
}

}  // namespace

TEST_CASE("nested duals recover exact first and second derivatives") {
  const double x = 0.7, y = -0.4;
  Vec<D2> in(2);
  in[0] = D2(x);
  in[1] = D2(y);
  in[0].b.a = 1.0;  // outer seed: d/dx
  in[1].a.b = 1.0;  // inner seed: d/dy
  D2 out = test_scalar(in);

  const double ex = std::exp(y);
  CHECK(out.a.a == doctest::Approx(x * x * y + std::sin(x) * ex).epsilon(1e-15));
  CHECK(out.b.a == doctest::Approx(2 * x * y + std::cos(x) * ex).epsilon(1e-15));
  CHECK(out.a.b == doctest::Approx(x * x + std::sin(x) * ex).epsilon(1e-15));
  CHECK(out.b.b == doctest::Approx(2 * x + std::cos(x) * ex).epsilon(1e-15));
}

TEST_CASE("division and sqrt propagate derivatives") {
  Vec<D1> in(1);
  in[0] = D1(2.0, 1.0);
  D1 r = sqrt(in[0]) / (in[0] + 1.0);
  // d/dx [sqrt(x)/(x+1)] = (1-x) / (2 sqrt(x) (x+1)^2)
  CHECK(r.b == doctest::Approx((1.0 - 2.0) / (2.0 * std::sqrt(2.0) * 9.0)).epsilon(1e-14));
}

TEST_CASE("scalar_jet gradient and Hessian match closed forms") {
  ScalarFn f = ScalarFn::make([](int, const auto& x) { return test_scalar(x); });
  Eigen::Vector2d p(0.3, 1.1);
  ScalarJet jet = scalar_jet(f, 0, p);
  const double ex = std::exp(p[1]);
  CHECK(jet.grad[0] == doctest::Approx(2 * p[0] * p[1] + std::cos(p[0]) * ex).epsilon(1e-14));
  CHECK(jet.grad[1] == doctest::Approx(p[0] * p[0] + std::sin(p[0]) * ex).epsilon(1e-14));
  CHECK(jet.hess(0, 0) == doctest::Approx(2 * p[1] - std::sin(p[0]) * ex).epsilon(1e-14));
  CHECK(jet.hess(0, 1) == doctest::Approx(2 * p[0] + std::cos(p[0]) * ex).epsilon(1e-14));
  CHECK(jet.hess(1, 1) == doctest::Approx(std::sin(p[0]) * ex).epsilon(1e-14));
  CHECK(jet.hess(0, 1) == jet.hess(1, 0));
}

TEST_CASE("metric_jet second derivatives agree with finite differences") {
  // Conformal 2d metric exp(2 x0 - x1) * I.
  auto metric = [](const auto& x, auto& g) {
    auto c = exp(x[0] * 2.0 - x[1]);
    g.set_identity_scaled(c);
  };
  MetricFn f = MetricFn::make(2, metric);
  Eigen::Vector2d p(0.2, 0.5);
  MetricJet jet = metric_jet(f, p);
  MetricJet1 fd = metric_jet1_fd(f, p);
  for (int k = 0; k < 2; ++k)
    CHECK((jet.dg[k] - fd.dg[k]).cwiseAbs().maxCoeff() < 1e-8);
  const double c = std::exp(2 * p[0] - p[1]);
  CHECK(jet.d2g[0][0](0, 0) == doctest::Approx(4 * c).epsilon(1e-13));
  CHECK(jet.d2g[0][1](1, 1) == doctest::Approx(-2 * c).epsilon(1e-13));
  CHECK(jet.d2g[1][1](0, 0) == doctest::Approx(c).epsilon(1e-13));
}
