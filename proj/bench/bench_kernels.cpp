#include <benchmark/benchmark.h>

#include <complex>
#include <random>
#include <vector>

#include "chebwidom/chebyshev.hpp"
#include "chebwidom/kernels.hpp"
#include "chebwidom/orthobasis.hpp"

using namespace chebwidom;

namespace {

struct Fixture {
  IntervalSet set = IntervalSet::validate({{-2, -1.1}, {-0.4, 0.5}, {1.2, 1.9}});
  ChebyshevSolver solver{set};
  ChebyshevResult result = solver.solve(40);
  std::vector<double> x;
  std::vector<std::complex<double>> z;

  Fixture() {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0), v(0.05, 2.0);
    x.resize(1 << 16);
    for (double& t : x) t = u(rng);
    z.resize(1 << 10);
    for (auto& w : z) w = {u(rng), v(rng)};
  }
};

Fixture& fixture() {
  static Fixture f;
  return f;
}

template <auto Kernel>
void expansion(benchmark::State& state) {
  Fixture& f = fixture();
  std::vector<double> v(f.x.size()), dv(f.x.size());
  for (auto _ : state) {
    Kernel(*f.result.expansion, f.x, v, dv);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * f.x.size());
}

template <auto Kernel>
void green(benchmark::State& state) {
  Fixture& f = fixture();
  std::vector<double> g(f.z.size());
  for (auto _ : state) {
    Kernel(*f.solver.equilibrium(), f.z, g);
    benchmark::DoNotOptimize(g.data());
  }
  state.SetItemsProcessed(state.iterations() * f.z.size());
}

}  // namespace

BENCHMARK(expansion<kernels::expansion_grid>)->Name("expansion_grid/omp");
BENCHMARK(expansion<kernels::expansion_grid_serial>)->Name("expansion_grid/serial");
BENCHMARK(green<kernels::green_grid>)->Name("green_grid/omp");
BENCHMARK(green<kernels::green_grid_serial>)->Name("green_grid/serial");

BENCHMARK_MAIN();
