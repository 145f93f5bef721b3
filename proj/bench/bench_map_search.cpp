// Serial brute-force reference vs the pruned parallel kernels.

#include <benchmark/benchmark.h>

#include "ffc/constructions.hpp"
#include "ffc/map_search.hpp"
#include "ffc/reference.hpp"

using namespace ffc;

namespace {

struct Pair {
  MultiDigraph g, h;
};

Pair pair_for(int which) {
  switch (which) {
    case 0: return {k4(), digon(3)};
    case 1: return {k4(), k4()};
    case 2: return {DigonFamily({3, 4}).graph(), DigonFamily({2, 3}).graph()};
    default: return {digon(7), digon(5)};
  }
}

const char* name_for(int which) {
  static const char* names[] = {"k4->digon3", "k4->k4", "D3+D4->D2+D3", "D7->D5"};
  return names[which];
}

void BM_ReferenceFFSet(benchmark::State& state) {
  auto [g, h] = pair_for(state.range(0));
  state.SetLabel(name_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::ff_set_of_graphs(g, h));
}

void BM_KernelFFSet(benchmark::State& state) {
  auto [g, h] = pair_for(state.range(0));
  state.SetLabel(name_for(state.range(0)));
  kernels::MapSpace space(g, h);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::ff_set(space));
}

void BM_ReferenceCount(benchmark::State& state) {
  auto [g, h] = pair_for(state.range(0));
  state.SetLabel(name_for(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::count_ff_maps(g, h, Modulus::cyclic(2)));
}

void BM_KernelCount(benchmark::State& state) {
  auto [g, h] = pair_for(state.range(0));
  state.SetLabel(name_for(state.range(0)));
  kernels::MapSpace space(g, h);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count(space, Modulus::cyclic(2)));
}

void BM_ReferenceSubcubic(benchmark::State& state) {
  const std::vector<std::uint64_t> moduli = {4, 5, 6, 7, 8};
  for (auto _ : state) benchmark::DoNotOptimize(reference::equivalence_violations(k4(), k4(), moduli));
}

void BM_KernelSubcubic(benchmark::State& state) {
  const std::vector<std::uint64_t> moduli = {4, 5, 6, 7, 8};
  kernels::MapSpace space(k4(), k4());
  for (auto _ : state) benchmark::DoNotOptimize(kernels::equivalence_scan(space, moduli));
}

}  // namespace

BENCHMARK(BM_ReferenceFFSet)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelFFSet)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReferenceCount)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelCount)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReferenceSubcubic)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KernelSubcubic)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
