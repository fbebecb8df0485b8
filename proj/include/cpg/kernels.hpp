#pragma once

#include <span>
#include <vector>

#include "cpg/group.hpp"

// The two data-parallel sweeps that dominate runtime. Each has a serial
// reference and an OpenMP variant with identical results (including order);
// the tests compare them and bench/ times them.
namespace cpg::kernels {

enum class Exec { Serial, Parallel };

// Number of worker threads the Parallel variants use; 0 means the OpenMP
// default.
void set_threads(int n);
int threads();

// { x in G : H H^x = H^x H }. Constant on right cosets of N_G(H).
ElementSet permuting_conjugators(const Subgroup& h);

namespace serial {

// For each frontier subgroup H and each generator g with g not in H, the
// join <H, g>; result[i] lists the distinct joins found for frontier[i] in
// generator order.
std::vector<std::vector<Subgroup>> extend_frontier(std::span<const Subgroup> frontier,
                                                   std::span<const Index> cyclic_generators);

std::vector<ElementSet> permuting_conjugators(std::span<const Subgroup> subgroups);

}  // namespace serial

namespace omp {

std::vector<std::vector<Subgroup>> extend_frontier(std::span<const Subgroup> frontier,
                                                   std::span<const Index> cyclic_generators);

std::vector<ElementSet> permuting_conjugators(std::span<const Subgroup> subgroups);

}  // namespace omp

inline std::vector<std::vector<Subgroup>> extend_frontier(std::span<const Subgroup> frontier,
                                                          std::span<const Index> cyclic_generators,
                                                          Exec exec) {
  return exec == Exec::Serial ? serial::extend_frontier(frontier, cyclic_generators)
                              : omp::extend_frontier(frontier, cyclic_generators);
}

inline std::vector<ElementSet> permuting_conjugators(std::span<const Subgroup> subgroups, Exec exec) {
  return exec == Exec::Serial ? serial::permuting_conjugators(subgroups)
                              : omp::permuting_conjugators(subgroups);
}

}  // namespace cpg::kernels
