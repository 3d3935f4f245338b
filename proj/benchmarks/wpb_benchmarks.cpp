#include "wpb/bateman.hpp"
#include "wpb/expansion.hpp"
#include "wpb/families.hpp"
#include "wpb/pairing.hpp"
#include "wpb/random_members.hpp"

#include <benchmark/benchmark.h>

using namespace wpb;

static void BM_Biorthonormality(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int n = 0; n <= n_max; ++n) {
      for (int m = 0; m <= n_max; ++m) benchmark::DoNotOptimize(pair(phi(n), psi(m)));
    }
  }
  state.SetItemsProcessed(state.iterations() * (n_max + 1) * (n_max + 1));
}
BENCHMARK(BM_Biorthonormality)->Arg(10)->Arg(30);

static void BM_CommutatorResidual(benchmark::State& state) {
  Rng rng(1);
  std::vector<WeakDistribution> members;
  for (int i = 0; i < 256; ++i) members.push_back(random_distribution(rng, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(commutator_residual(members[i++ % members.size()]));
}
BENCHMARK(BM_CommutatorResidual)->Arg(50)->Arg(400);

static void BM_QuasiBasisScan(benchmark::State& state) {
  PrecisionScope scope(34);
  const auto f = make_gaussian(1);
  const auto g = make_gaussian(Rational(1, 2));
  ScanOptions options;
  options.n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(quasi_basis_scan(*f, *g, options));
}
BENCHMARK(BM_QuasiBasisScan)->Arg(60)->Arg(512)->Unit(benchmark::kMillisecond);

static void BM_EulerScan(benchmark::State& state) {
  PrecisionScope scope(34);
  const auto g = make_gaussian(Rational(1, 2));
  ScanOptions options;
  options.n_max = 400;
  options.acceleration = Acceleration::euler;
  for (auto _ : state) benchmark::DoNotOptimize(quasi_basis_scan(*g, *g, options));
}
BENCHMARK(BM_EulerScan)->Unit(benchmark::kMillisecond);

static void BM_HamiltonianForms(benchmark::State& state) {
  PrecisionScope scope(34);
  const auto p = BatemanParams::create(1, Rational(1, 2), 1);
  const int T = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize((hamiltonian_bosonic(p, T) - hamiltonian_pb(p, T)).max_abs_on(SafeSubspace{T - 2}));
  }
}
BENCHMARK(BM_HamiltonianForms)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void BM_KernelScan(benchmark::State& state) {
  PrecisionScope scope(static_cast<unsigned>(state.range(1)));
  const auto p = BatemanParams::create(1, Rational(1, 2), 1);
  const int T = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(joint_kernel_scan(p, {T}));
}
BENCHMARK(BM_KernelScan)->Args({8, 34})->Args({12, 34})->Args({12, 60})->Unit(benchmark::kMillisecond);

static void BM_VacuumBattery(benchmark::State& state) {
  const auto p = BatemanParams::create(1, Rational(1, 2), 1);
  for (auto _ : state) benchmark::DoNotOptimize(run_vacuum_battery(p, Vacuum::phi00));
}
BENCHMARK(BM_VacuumBattery)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
