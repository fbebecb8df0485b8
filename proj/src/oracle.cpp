#include "cpg/oracle.hpp"

#include <algorithm>
#include <cstdint>

#include "cpg/errors.hpp"

namespace cpg::oracle {

std::vector<std::vector<Index>> powerset_subgroups(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n > kPowersetLimit) {
    throw Error("powerset oracle is limited to groups of order <= " + std::to_string(kPowersetLimit));
  }
  std::vector<std::vector<Index>> out;
  // bit i of `mask` selects element i+1; the identity is always present
  const std::uint32_t subsets = std::uint32_t{1} << (n - 1);
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    std::vector<Index> members{FiniteGroup::identity()};
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) members.push_back(static_cast<Index>(i + 1));
    }
    auto in = [&](Index x) { return x == 0 || (mask & (std::uint32_t{1} << (x - 1))); };
    bool closed = true;
    for (Index a : members) {
      for (Index b : members) {
        if (!in(g.mul(a, b))) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace cpg::oracle
