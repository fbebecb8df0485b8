#include <unordered_set>

#include "cpg/kernels.hpp"
#include "cpg/lattice.hpp"

namespace cpg::kernels {

ElementSet permuting_conjugators(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  const auto norm = normalizer(h).members().to_vector();
  ElementSet done(g.order());
  ElementSet result(g.order());
  for (Index x = 0; x < g.order(); ++x) {
    if (done.contains(x)) continue;
    const bool ok = permutes(h, conjugate(h, x));
    for (Index n : norm) {
      Index y = g.mul(n, x);
      done.insert(y);
      if (ok) result.insert(y);
    }
  }
  return result;
}

namespace serial {

std::vector<std::vector<Subgroup>> extend_frontier(std::span<const Subgroup> frontier,
                                                   std::span<const Index> cyclic_generators) {
  std::vector<std::vector<Subgroup>> out;
  out.reserve(frontier.size());
  for (const Subgroup& h : frontier) {
    std::vector<Subgroup> joins;
    std::unordered_set<ElementSet, ElementSetHash> seen;
    for (Index x : cyclic_generators) {
      if (h.contains(x)) continue;
      Subgroup j = join(h, x);
      if (seen.insert(j.members()).second) joins.push_back(std::move(j));
    }
    out.push_back(std::move(joins));
  }
  return out;
}

std::vector<ElementSet> permuting_conjugators(std::span<const Subgroup> subgroups) {
  std::vector<ElementSet> out;
  out.reserve(subgroups.size());
  for (const Subgroup& h : subgroups) out.push_back(kernels::permuting_conjugators(h));
  return out;
}

}  // namespace serial
}  // namespace cpg::kernels
