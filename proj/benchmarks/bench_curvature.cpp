#include <benchmark/benchmark.h>

#include "tubegeo/catalog.hpp"
#include "tubegeo/curvature.hpp"

using namespace tubegeo;

static void CurvaturePacketSphere(benchmark::State& state) {
  auto M = make_sphere(static_cast<int>(state.range(0)));
  ChartPoint p{0, Eigen::VectorXd::Constant(M->dim(), 0.3)};
  for (auto _ : state) {
    CurvaturePacket pk = riemann_at(*M, p);
    benchmark::DoNotOptimize(pk.scalar);
  }
}
BENCHMARK(CurvaturePacketSphere)->Arg(2)->Arg(4)->Arg(6);

static void ChristoffelSphere(benchmark::State& state) {
  auto M = make_sphere(static_cast<int>(state.range(0)));
  ChartPoint p{0, Eigen::VectorXd::Constant(M->dim(), 0.3)};
  for (auto _ : state) {
    auto gam = christoffel_at(*M, p);
    benchmark::DoNotOptimize(gam[0](0, 0));
  }
}
BENCHMARK(ChristoffelSphere)->Arg(2)->Arg(4)->Arg(6);

static void IntrinsicScalarVeronese(benchmark::State& state) {
  auto e = make_entry("s4-cartan", 0, 0, 0, {});
  PatchPtr P = e.patches.front();
  Eigen::VectorXd u(2);
  u << 1.2, 0.9;
  for (auto _ : state) {
    double s = riemann_at(*P->intrinsic(), ChartPoint{0, u}).scalar;
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(IntrinsicScalarVeronese);

BENCHMARK_MAIN();
