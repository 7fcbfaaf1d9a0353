// Serial reference vs OpenMP right-hand side. Set OMP_NUM_THREADS to vary the team size.

#include <benchmark/benchmark.h>

#include "rbfweno/problems.hpp"
#include "rbfweno/solver.hpp"

using namespace rbfweno;

namespace {

Scheme scheme_of(int64_t i) { return static_cast<Scheme>(i); }

void rhs_1d_bench(benchmark::State& state, Exec exec) {
  const int n = static_cast<int>(state.range(0));
  const Scheme s = scheme_of(state.range(1));
  const Grid1D g = problem_grid(ProblemId::sod, n);
  const Field1D u = init_1d(ProblemId::sod, g);
  const Physics ph{Equation::euler, {}};
  const SchemeConfig cfg{3, s, EulerMode::characteristic, true};
  const double alpha = max_wavespeed(u, ph.equation, ph.eos);
  Field1D L(n, 3);
  for (auto _ : state) {
    rhs_1d(u, g, ph, cfg, alpha, L, exec);
    benchmark::DoNotOptimize(L.values().data());
  }
  state.SetItemsProcessed(state.iterations() * n);
  state.SetLabel(std::string(to_string(s)));
}

void rhs_2d_bench(benchmark::State& state, Exec exec) {
  const int ny = static_cast<int>(state.range(0));
  const Scheme s = scheme_of(state.range(1));
  const Grid2D g(0.0, 4.0, 4 * ny, 0.0, 1.0, ny);
  const DmrSetup setup = dmr_setup(g);
  const Physics ph{Equation::euler, {}};
  const SchemeConfig cfg{3, s, EulerMode::characteristic, true};
  const double ax = max_wavespeed(setup.field, ph.equation, ph.eos, Direction::x);
  const double ay = max_wavespeed(setup.field, ph.equation, ph.eos, Direction::y);
  Field2D L(g.nx, g.ny, 4);
  for (auto _ : state) {
    rhs_2d(setup.field, g, ph, cfg, ax, ay, L, exec);
    benchmark::DoNotOptimize(L.values().data());
  }
  state.SetItemsProcessed(state.iterations() * g.nx * g.ny);
  state.SetLabel(std::string(to_string(s)));
}

void schemes_1d(benchmark::internal::Benchmark* b) {
  for (int s = 0; s < 4; ++s) b->Args({4096, s});
}

void schemes_2d(benchmark::internal::Benchmark* b) {
  for (int s : {2, 3}) b->Args({80, s});
}

}  // namespace

BENCHMARK_CAPTURE(rhs_1d_bench, serial, Exec::serial)->Apply(schemes_1d);
BENCHMARK_CAPTURE(rhs_1d_bench, omp, Exec::parallel)->Apply(schemes_1d);
BENCHMARK_CAPTURE(rhs_2d_bench, serial, Exec::serial)->Apply(schemes_2d)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(rhs_2d_bench, omp, Exec::parallel)->Apply(schemes_2d)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
