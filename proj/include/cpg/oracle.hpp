#pragma once

#include <cstddef>
#include <vector>

#include "cpg/group.hpp"

namespace cpg::oracle {

inline constexpr std::size_t kPowersetLimit = 16;

// Every subset of G containing the identity, tested for closure under
// products. Shares nothing with the lattice code beyond the multiplication
// table. Member lists are sorted; the result is sorted by (size, members).
// Throws Error for |G| > kPowersetLimit.
std::vector<std::vector<Index>> powerset_subgroups(const FiniteGroup& g);

}  // namespace cpg::oracle
