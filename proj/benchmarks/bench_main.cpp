#include <cmath>
#include <random>

#include <benchmark/benchmark.h>

#include "qbatt/ergotropy.hpp"
#include "qbatt/lindblad.hpp"
#include "qbatt/nonmarkov.hpp"
#include "qbatt/operators.hpp"

using namespace qbatt;

namespace {

linalg::DensityMatrix random_state() {
  // Fixed mixed pair state with coherences; deterministic across runs.
  std::mt19937_64 rng(1234);
  std::normal_distribution<double> gauss(0.0, 1.0);
  linalg::Matrix g(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      g(i, j) = linalg::Complex(gauss(rng), gauss(rng));
    }
  }
  linalg::Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return linalg::validate_density_matrix(rho);
}

void bench_kernel_underdamped(benchmark::State& state) {
  const nonmarkov::LorentzianBath bath(1.0, 30.0);
  double t = 0.0;
  for (auto _ : state) {
    t += 1e-3;
    benchmark::DoNotOptimize(nonmarkov::kappa(bath, t));
  }
}
BENCHMARK(bench_kernel_underdamped);

void bench_amplitude_grid(benchmark::State& state) {
  const nonmarkov::LorentzianBath bath(1.0, 30.0);
  const nonmarkov::CouplingSplit split(1.0 / std::sqrt(2.0));
  const auto n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    double acc = 0.0;
    for (int k = 0; k < n; ++k) {
      const double t = 2.0 * static_cast<double>(k) / n;
      const auto s = nonmarkov::evolve_amplitudes(bath, split, 1.0, 0.0, t);
      acc += std::norm(s.nu2);
    }
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(bench_amplitude_grid)->Arg(2001);

void bench_pair_eigensystem(benchmark::State& state) {
  const auto rho = random_state();
  for (auto _ : state) {
    benchmark::DoNotOptimize(linalg::hermitian_eigensystem(rho));
  }
}
BENCHMARK(bench_pair_eigensystem);

void bench_two_cell_ergotropy(benchmark::State& state) {
  const auto rho = random_state();
  for (auto _ : state) {
    benchmark::DoNotOptimize(ergotropy::two_cell(rho));
  }
}
BENCHMARK(bench_two_cell_ergotropy);

void bench_generator_exponential(benchmark::State& state) {
  lindblad::MarkovParams p;
  p.dipole = 1.0;
  p.decay = 0.5;
  p.collective_decay = 0.45;
  const lindblad::Generator gen(p);
  for (auto _ : state) {
    benchmark::DoNotOptimize(linalg::matrix_exponential(gen.matrix(), 1.0));
  }
}
BENCHMARK(bench_generator_exponential);

void bench_evolve_unit_time(benchmark::State& state) {
  lindblad::MarkovParams p;
  p.dipole = 1.0;
  p.decay = 0.5;
  p.collective_decay = 0.45;
  p.drive1 = 0.3;
  p.drive2 = 0.3;
  const lindblad::Generator gen(p);
  const auto rho0 = random_state();
  const double h = gen.default_step();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lindblad::evolve(gen, rho0, 1.0, h));
  }
}
BENCHMARK(bench_evolve_unit_time);

}  // namespace

BENCHMARK_MAIN();
