#include <benchmark/benchmark.h>

#include "thurstonkit/pretzel.hpp"

using namespace thurstonkit;

static void BM_SlabVertices(benchmark::State& state) {
  const PretzelParams p{-state.range(0), 2, 3};
  const HRep slabs = euler_slab_system(p);
  for (auto _ : state) benchmark::DoNotOptimize(h_to_v(slabs));
}
BENCHMARK(BM_SlabVertices)->Arg(2)->Arg(5)->Arg(20);

static void BM_SeminormOf(benchmark::State& state) {
  const PretzelParams p{state.range(0), 3, 4};
  for (auto _ : state) benchmark::DoNotOptimize(seminorm_of(p));
}
BENCHMARK(BM_SeminormOf)->Arg(-3)->Arg(2);

static void BM_VerifyCase(benchmark::State& state) {
  const PretzelParams p{-2, 2, 2};
  VerifyOptions opts;
  opts.samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_case(p, opts));
}
BENCHMARK(BM_VerifyCase)->Arg(100)->Arg(1000);
BENCHMARK_MAIN();
