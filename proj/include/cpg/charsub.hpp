#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "cpg/group.hpp"
#include "cpg/lattice.hpp"

namespace cpg {

std::vector<std::size_t> prime_divisors(std::size_t n);
// Largest power of p dividing n.
std::size_t p_part(std::size_t n, std::size_t p);
bool is_prime_power(std::size_t n);

Subgroup center(const FiniteGroup& g);
// Z_1 = Z(G), Z_{i+1} = preimage of Z(G/Z_i); ends at the first repeated term.
std::vector<Subgroup> upper_central_series(const FiniteGroup& g);
Subgroup hypercenter(const FiniteGroup& g);

Subgroup derived_subgroup(const Subgroup& h);
Subgroup derived_subgroup(const FiniteGroup& g);
// H, H', H'', ... ending at the first repeated term.
std::vector<Subgroup> derived_series(const FiniteGroup& g);

// One Sylow p-subgroup of H (the trivial subgroup when p does not divide |H|).
Subgroup sylow_subgroup(const Subgroup& h, std::size_t p);
// All Sylow p-subgroups of H, first the one above, then its H-conjugates.
std::vector<Subgroup> sylow_subgroups(const Subgroup& h, std::size_t p);
std::vector<Subgroup> sylow_subgroups(const FiniteGroup& g, std::size_t p);

// O_p(G): intersection of the Sylow p-subgroups.
Subgroup p_core(const FiniteGroup& g, std::size_t p);

// Every Sylow subgroup of H is normal in H.
bool subgroup_is_nilpotent(const Subgroup& h);

// Product of the O_p(G).
Subgroup fitting(const FiniteGroup& g);
// Largest nilpotent member of the normal-subgroup list; used as a cross-check.
Subgroup fitting_from_lattice(const SubgroupLattice& lattice);

// Intersection of maximal subgroups, with Φ(1) = 1.
Subgroup frattini(const SubgroupLattice& lattice);
Subgroup frattini(const FiniteGroup& g);

// Join of the minimal normal subgroups; Soc(1) = 1.
Subgroup socle(const FiniteGroup& g);

// F*(G)/F(G) = Soc(C_G(F(G))F(G)/F(G)).
Subgroup f_star(const FiniteGroup& g);

// F~(G)/Φ(G) = Soc(G/Φ(G)).
Subgroup f_tilde(const Subgroup& frattini_subgroup);
Subgroup f_tilde(const SubgroupLattice& lattice);

struct CharacteristicProfile {
  Subgroup center;
  Subgroup hypercenter;
  Subgroup derived;
  Subgroup fitting;
  Subgroup frattini;
  Subgroup socle;
  Subgroup f_star;
  Subgroup f_tilde;
  std::map<std::size_t, std::vector<Subgroup>> sylow;
};

CharacteristicProfile characteristic_profile(const SubgroupLattice& lattice);

}  // namespace cpg
