#pragma once

// Slow, table-free reference computations for the unit tests. Everything here
// works on Permutation values directly and never touches FiniteGroup::mul.

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cpg/cycle_notation.hpp"
#include "cpg/group.hpp"

namespace support {

using cpg::Index;
using cpg::Permutation;
using cpg::Subgroup;
using PermSet = std::set<Permutation>;

inline PermSet elements(const Subgroup& h) {
  PermSet out;
  h.members().for_each([&](Index i) { out.insert(h.parent().element(i)); });
  return out;
}

inline PermSet product(const PermSet& a, const PermSet& b) {
  PermSet out;
  for (const auto& x : a) {
    for (const auto& y : b) out.insert(cpg::compose(x, y));
  }
  return out;
}

inline PermSet conjugate(const PermSet& h, const Permutation& x) {
  PermSet out;
  const auto xi = cpg::inverse(x);
  for (const auto& y : h) out.insert(cpg::compose(cpg::compose(xi, y), x));
  return out;
}

inline bool permutes(const PermSet& a, const PermSet& b) { return product(a, b) == product(b, a); }

// Closure by repeated multiplication until nothing new appears.
inline PermSet closure(std::size_t degree, const std::vector<Permutation>& gens) {
  PermSet out{Permutation::identity(degree)};
  bool grew = true;
  while (grew) {
    grew = false;
    PermSet next = out;
    for (const auto& a : out) {
      for (const auto& g : gens) next.insert(cpg::compose(a, g));
    }
    grew = next.size() != out.size();
    out = std::move(next);
  }
  return out;
}

inline Subgroup from_set(const cpg::FiniteGroup& g, const PermSet& s) {
  cpg::ElementSet m(g.order());
  for (const auto& p : s) m.insert(*g.index_of(p));
  return Subgroup(g, m);
}

// "(1 2), (3 4)" -> element indices in g
inline std::vector<Index> elems(const cpg::FiniteGroup& g, const std::string& text) {
  std::vector<Index> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(*g.index_of(cpg::parse_cycles(tok, g.degree())));
  return out;
}

inline Subgroup sub(const cpg::FiniteGroup& g, const std::string& text) {
  return cpg::generate(g, elems(g, text));
}

inline Index elem(const cpg::FiniteGroup& g, const std::string& text) { return elems(g, text).front(); }

}  // namespace support
