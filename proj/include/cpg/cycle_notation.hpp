#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "cpg/permutation.hpp"

namespace cpg {

// 1-based cycle notation: "(1 2 3)(4 5)", fixed points omitted, identity "()".
std::string to_cycles(const Permutation& p);

// Parses 1-based cycle notation into a permutation of `degree` points.
// Throws ParseError (offsets relative to `text`, shifted by `base_offset`).
Permutation parse_cycles(std::string_view text, std::size_t degree, std::size_t base_offset = 0);

}  // namespace cpg
