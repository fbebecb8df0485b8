#include <benchmark/benchmark.h>

#include <algorithm>
#include <vector>

#include "cpg/expr.hpp"
#include "cpg/kernels.hpp"
#include "cpg/lattice.hpp"

using namespace cpg;

namespace {

const char* const kGroups[] = {"S5", "C2 x A5", "Ex3"};

struct Fixture {
  GroupPtr group;
  std::vector<Subgroup> subgroups;
  std::vector<Subgroup> cyclic;
  std::vector<Index> cyclic_gens;
};

const Fixture& fixture(int which) {
  static std::vector<Fixture> cache = [] {
    std::vector<Fixture> out;
    for (const char* e : kGroups) {
      Fixture f;
      f.group = build(e);
      auto lat = all_subgroups(*f.group);
      f.subgroups.assign(lat.begin(), lat.end());
      for (Index x = 1; x < f.group->order(); ++x) {
        auto c = cyclic_subgroup(*f.group, x);
        if (std::find(f.cyclic.begin(), f.cyclic.end(), c) != f.cyclic.end()) continue;
        f.cyclic.push_back(c);
        f.cyclic_gens.push_back(x);
      }
      out.push_back(std::move(f));
    }
    return out;
  }();
  return cache[static_cast<std::size_t>(which)];
}

template <kernels::Exec E>
void BM_extend_frontier(benchmark::State& state) {
  const auto& f = fixture(static_cast<int>(state.range(0)));
  state.SetLabel(kGroups[state.range(0)]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::extend_frontier(f.cyclic, f.cyclic_gens, E));
  }
}

template <kernels::Exec E>
void BM_permuting_conjugators(benchmark::State& state) {
  const auto& f = fixture(static_cast<int>(state.range(0)));
  state.SetLabel(kGroups[state.range(0)]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::permuting_conjugators(f.subgroups, E));
  }
}

}  // namespace

BENCHMARK(BM_extend_frontier<kernels::Exec::Serial>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_extend_frontier<kernels::Exec::Parallel>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_permuting_conjugators<kernels::Exec::Serial>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_permuting_conjugators<kernels::Exec::Parallel>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
