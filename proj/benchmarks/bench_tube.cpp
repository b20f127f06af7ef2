#include <benchmark/benchmark.h>

#include "tubegeo/catalog.hpp"
#include "tubegeo/flows.hpp"

using namespace tubegeo;

namespace {

struct CartanRay {
  CatalogEntry entry = make_entry("s4-cartan", 0, 0, 0, {});
  Eigen::VectorXd u, v;
  CartanRay() {
    u.resize(2);
    u << 1.1, 0.8;
    v.resize(2);
    v << std::cos(0.4), std::sin(0.4);
  }
};

}  // namespace

static void RayConstruction(benchmark::State& state) {
  CartanRay c;
  for (auto _ : state) {
    FermiRay ray = normal_frame_ray(c.entry.patches.front(), c.u, c.v, 0.9, 1e-3);
    benchmark::DoNotOptimize(ray.node_count());
  }
}
BENCHMARK(RayConstruction);

static void RiccatiSweep(benchmark::State& state) {
  CartanRay c;
  FermiRay ray = normal_frame_ray(c.entry.patches.front(), c.u, c.v, 0.9, 1e-3);
  ShapeSample seed = series_seed(*c.entry.patches.front(), c.u, c.v, 1e-2);
  for (auto _ : state) {
    RiccatiFlow flow(ray, seed);
    benchmark::DoNotOptimize(flow.eval(0.85)(0, 0));
  }
}
BENCHMARK(RiccatiSweep);

static void JacobiSweep(benchmark::State& state) {
  CartanRay c;
  FermiRay ray = normal_frame_ray(c.entry.patches.front(), c.u, c.v, 0.9, 1e-3);
  for (auto _ : state) {
    JacobiFlow flow(ray);
    benchmark::DoNotOptimize(flow.eval(0.85)(0, 0));
  }
}
BENCHMARK(JacobiSweep);

static void ShapeOfSubmanifold(benchmark::State& state) {
  CartanRay c;
  for (auto _ : state) {
    Eigen::MatrixXd T = shape_of_submanifold(*c.entry.patches.front(), c.u, c.v);
    benchmark::DoNotOptimize(T(0, 0));
  }
}
BENCHMARK(ShapeOfSubmanifold);

BENCHMARK_MAIN();
