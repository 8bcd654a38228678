#include <benchmark/benchmark.h>

#include "kanact/covering.hpp"
#include "kanact/homology.hpp"
#include "kanact/instances.hpp"
#include "kanact/nerve.hpp"
#include "kanact/theorems.hpp"

using namespace kanact;

static void BM_Nerve(benchmark::State& state) {
  const auto g = cyclic_group(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(nerve_of_group(g, 4));
}
BENCHMARK(BM_Nerve)->Arg(2)->Arg(4)->Arg(6);

static void BM_KanCheck(benchmark::State& state) {
  const auto k = nerve_of_group(cyclic_group(static_cast<int>(state.range(0))), 3);
  for (auto _ : state) benchmark::DoNotOptimize(check_kan(k, 2));
}
BENCHMARK(BM_KanCheck)->Arg(2)->Arg(3)->Arg(4);

static void BM_IntegralHomology(benchmark::State& state) {
  const auto c = boundary_matrices(nerve_of_group(cyclic_group(static_cast<int>(state.range(0))), 4));
  for (auto _ : state) benchmark::DoNotOptimize(integral_homology(c));
}
BENCHMARK(BM_IntegralHomology)->Arg(2)->Arg(3)->Arg(4);

static void BM_CoverHomology(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto k = nerve_of_group(cyclic_group(n), 4);
  const auto q = parity_quotient(k, n);
  for (auto _ : state) {
    const auto c = build_cover(k, q);
    benchmark::DoNotOptimize(integral_homology(boundary_matrices(c.total)));
  }
}
BENCHMARK(BM_CoverHomology)->Arg(4)->Arg(6);

static void BM_Realization(benchmark::State& state) {
  const auto c = realization_case(state.range(0) != 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        realize_extension(c.quotient.group, *c.phi_group, *c.phi, c.complex, c.quotient));
  }
}
BENCHMARK(BM_Realization)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
