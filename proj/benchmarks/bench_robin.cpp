#include <benchmark/benchmark.h>

#include "robin/coefficients.hpp"
#include "robin/fd_solver.hpp"
#include "robin/norms.hpp"
#include "robin/radial_oracle.hpp"
#include "robin/regimes.hpp"

#include <cmath>
#include <vector>

namespace {

using namespace robin;

RadialExampleSpec oracle_spec(double theta, double amplitude) {
  RadialExampleSpec spec;
  spec.theta = theta;
  spec.amplitude = amplitude;
  spec.gamma = 1.0;
  return spec;
}

void BM_CoefficientRoundTrip(benchmark::State& state) {
  const CoefficientFamily family(0.5);
  double t = 3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(family.B_inv(family.B(t)));
    t = t < 1e6 ? t * 1.0000001 : 3.0;
  }
}
BENCHMARK(BM_CoefficientRoundTrip);

void BM_OracleSolve(benchmark::State& state) {
  const RadialExampleSpec spec =
      oracle_spec(state.range(0) == 0 ? 1.0 : 0.5, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_boundary_value(spec));
  }
}
BENCHMARK(BM_OracleSolve)->Arg(0)->Arg(1);

void BM_PicardSolve(benchmark::State& state) {
  ProblemSpec spec;
  spec.theta = 1.0;
  spec.source = PowerSource{1.0, 1.0};
  spec.mesh.cells = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(picard_solve(spec));
  }
}
BENCHMARK(BM_PicardSolve)->Arg(256)->Arg(1024)->Arg(4096);

void BM_LpNorm(benchmark::State& state) {
  const int cells = static_cast<int>(state.range(0));
  const auto nodes = graded_mesh(1.0, cells, 2.0);
  std::vector<double> values(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) values[i] = std::cos(nodes[i]);
  const RadialGridFunction g(nodes, values, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lp_norm(g, 2.5));
  }
}
BENCHMARK(BM_LpNorm)->Arg(1024)->Arg(8192);

void BM_MarcinkiewiczSup(benchmark::State& state) {
  const int cells = static_cast<int>(state.range(0));
  std::vector<double> nodes(static_cast<std::size_t>(cells) + 1);
  for (int i = 0; i <= cells; ++i) {
    nodes[static_cast<std::size_t>(i)] =
        1e-6 * std::pow(1e6, static_cast<double>(i) / cells);
  }
  nodes.back() = 1.0;
  std::vector<double> values(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) values[i] = 1.0 / nodes[i];
  const RadialGridFunction g(nodes, values, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(marcinkiewicz_sup(g, 3.0));
  }
}
BENCHMARK(BM_MarcinkiewiczSup)->Arg(512)->Arg(2048);

void BM_Classify(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(3, 0.5, 1.4));
    benchmark::DoNotOptimize(
        classify<Rational>(3, Rational(1, 2), Rational(7, 5)));
  }
}
BENCHMARK(BM_Classify);

}  // namespace

BENCHMARK_MAIN();
