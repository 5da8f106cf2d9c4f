// Parallel blocked phase sum against the serial direct sum, on transform-sized inputs.
#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "mellin/kernels.hpp"

namespace {

using mellin::Complex;
using mellin::kernels::Lattice;

struct Problem {
  std::vector<double> nodes;
  std::vector<Complex> coeffs;
  Lattice lattice;
  std::vector<Complex> out;
};

Problem make_problem(std::size_t n, std::size_t m) {
  Problem p;
  p.nodes.resize(n);
  p.coeffs.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = -120.0 + 240.0 * static_cast<double>(i) / static_cast<double>(n - 1);
    p.nodes[i] = u;
    p.coeffs[i] = Complex(std::exp(-0.01 * u * u), 0.1 * std::sin(u));
  }
  p.lattice = {-4.0 * M_PI, 8.0 * M_PI / static_cast<double>(m - 1), m};
  p.out.resize(m);
  return p;
}

void BM_PhaseSumParallel(benchmark::State& state) {
  auto p = make_problem(state.range(0), state.range(1));
  for (auto _ : state) {
    mellin::kernels::phase_sum(p.nodes, p.coeffs, p.lattice, 1.0, p.out);
    benchmark::DoNotOptimize(p.out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}

void BM_PhaseSumReference(benchmark::State& state) {
  auto p = make_problem(state.range(0), state.range(1));
  for (auto _ : state) {
    mellin::kernels::reference::phase_sum(p.nodes, p.coeffs, p.lattice, 1.0, p.out);
    benchmark::DoNotOptimize(p.out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}

}  // namespace

BENCHMARK(BM_PhaseSumParallel)->Args({1024, 513})->Args({8192, 4097})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhaseSumReference)->Args({1024, 513})->Args({8192, 4097})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
