// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include "sdfp/constraint_map.hpp"
#include "sdfp/generator.hpp"
#include "sdfp/projective.hpp"
#include "sdfp/solver.hpp"

namespace {

using namespace sdfp;

GeneratedInstance make_instance(int block, int blocks, int m, bool feasible) {
  GeneratorSpec spec;
  spec.sizes.assign(static_cast<std::size_t>(blocks), block);
  spec.m = m;
  spec.kind = feasible ? InstanceKind::PlantedFeasible : InstanceKind::CertifiedInfeasible;
  spec.seed = 99;
  return generate_instance(spec);
}

void BM_project(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  GeneratedInstance instance = make_instance(n, 1, m, true);
  KernelProjector projector = build_projector(instance.map);
  Rng rng(1);
  BlockVec x = random_symmetric(instance.map.structure(), rng, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(project(projector, x));
  }
}
BENCHMARK(BM_project)->Args({10, 8})->Args({20, 16})->Args({20, 30});

void BM_build_projector(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  GeneratedInstance instance = make_instance(12, 1, m, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_projector(instance.map));
  }
}
BENCHMARK(BM_build_projector)->Arg(8)->Arg(16)->Arg(30);

void BM_pd_sqrt_factors(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  BlockStructure structure({n});
  Rng rng(2);
  BlockVec a = random_spectraplex_pd(structure, rng) + identity(structure);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pd_sqrt_factors(a));
  }
}
BENCHMARK(BM_pd_sqrt_factors)->Arg(5)->Arg(10)->Arg(20);

void BM_min_eigpair(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  BlockStructure structure({n, n});
  Rng rng(3);
  BlockVec x = random_symmetric(structure, rng, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(min_eigpair(x));
  }
}
BENCHMARK(BM_min_eigpair)->Arg(5)->Arg(10)->Arg(20);

void BM_solve_feasible(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GeneratedInstance instance = make_instance(n, 1, 2 * n, true);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(instance.map, SolverConfig{}));
  }
}
BENCHMARK(BM_solve_feasible)->Arg(5)->Arg(10)->Arg(20);

void BM_solve_infeasible(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  GeneratedInstance instance = make_instance(n, 1, 3, false);
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve(instance.map, SolverConfig{}));
  }
}
BENCHMARK(BM_solve_infeasible)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
