#include <omp.h>

#include <atomic>
#include <unordered_set>

#include "cpg/kernels.hpp"

namespace cpg::kernels {

namespace {
std::atomic<int> g_threads{0};

int team_size() {
  int n = g_threads.load(std::memory_order_relaxed);
  return n > 0 ? n : omp_get_max_threads();
}
}  // namespace

void set_threads(int n) { g_threads.store(n < 0 ? 0 : n, std::memory_order_relaxed); }
int threads() { return team_size(); }

namespace omp {

std::vector<std::vector<Subgroup>> extend_frontier(std::span<const Subgroup> frontier,
                                                   std::span<const Index> cyclic_generators) {
  std::vector<std::vector<Subgroup>> out(frontier.size());
  const long n = static_cast<long>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(team_size())
  for (long i = 0; i < n; ++i) {
    const Subgroup& h = frontier[static_cast<std::size_t>(i)];
    std::vector<Subgroup> joins;
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (Index x : cyclic_generators) {
      if (h.contains(x)) continue;
      Subgroup j = join(h, x);
      if (seen.insert(j.members()).second) joins.push_back(std::move(j));
    }
    out[static_cast<std::size_t>(i)] = std::move(joins);
  }
  return out;
}

std::vector<ElementSet> permuting_conjugators(std::span<const Subgroup> subgroups) {
  std::vector<ElementSet> out(subgroups.size());
  const long n = static_cast<long>(subgroups.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(team_size())
  for (long i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = kernels::permuting_conjugators(subgroups[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace omp
}  // namespace cpg::kernels
