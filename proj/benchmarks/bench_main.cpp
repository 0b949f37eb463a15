#include <benchmark/benchmark.h>

#include "weylfaces/faces.hpp"
#include "weylfaces/oracle.hpp"
#include "weylfaces/weights.hpp"

namespace {

using namespace weylfaces;

const CartanData& a3() {
  static const CartanData c = validate_gcm({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  return c;
}

const CartanData& b3() {
  static const CartanData c = validate_gcm({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
  return c;
}

void BM_OrbitA3Regular(benchmark::State& state) {
  const Weight rho_w = rho(a3());
  for (auto _ : state) {
    OrbitReport rep = orbit(a3(), a3().all_nodes(), rho_w);
    benchmark::DoNotOptimize(rep.size());
  }
}
BENCHMARK(BM_OrbitA3Regular);

void BM_FPolynomialB3(benchmark::State& state) {
  const ModuleDescriptor v = make_module(b3(), {1, 1, 1}, b3().all_nodes());
  for (auto _ : state) {
    ExtPolynomial f = f_polynomial(v);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_FPolynomialB3);

void BM_HullA3Permutohedron(benchmark::State& state) {
  const ModuleDescriptor v = make_module(a3(), {1, 2, 1}, a3().all_nodes());
  const RayGenerators gen = ray_generators(v);
  std::vector<RatVec> pts;
  for (const Weight& w : gen.vertices) pts.push_back(w.offset);
  for (auto _ : state) {
    ExtPolynomial f = hull_f_polynomial(pts);
    benchmark::DoNotOptimize(f);
  }
}
BENCHMARK(BM_HullA3Permutohedron);

void BM_MembershipA3(benchmark::State& state) {
  const ModuleDescriptor v = make_module(a3(), {1, 2, 1}, a3().all_nodes());
  const WeylPolyhedron p = make_weyl_polyhedron(a3(), v.hw, v.integrability);
  RatSampler sampler(11);
  std::vector<RatVec> samples;
  for (int s = 0; s < 64; ++s) {
    RatVec offset(3);
    for (int i = 0; i < 3; ++i) offset[i] = sampler.in_range(Rat(-1), Rat(5));
    samples.push_back(std::move(offset));
  }
  std::size_t k = 0;
  for (auto _ : state) {
    Membership m = in_weyl_polyhedron(p, Weight{v.hw.base, samples[k++ % samples.size()]});
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_MembershipA3);

}  // namespace

BENCHMARK_MAIN();
