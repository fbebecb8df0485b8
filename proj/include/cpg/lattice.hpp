#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cpg/group.hpp"
#include "cpg/kernels.hpp"

namespace cpg {

inline constexpr std::size_t kDefaultSubgroupCap = 20000;

/// The complete list of subgroups of a group, sorted by order and then by
/// the lexicographic order of member indices. Position 0 is the trivial
/// subgroup and the last position is the whole group.
class SubgroupLattice {
 public:
  SubgroupLattice(const FiniteGroup& g, std::vector<Subgroup> subgroups);

  const FiniteGroup& group() const noexcept { return *group_; }
  const std::vector<Subgroup>& subgroups() const noexcept { return subgroups_; }
  std::size_t size() const noexcept { return subgroups_.size(); }
  const Subgroup& operator[](std::size_t i) const { return subgroups_[i]; }
  auto begin() const noexcept { return subgroups_.begin(); }
  auto end() const noexcept { return subgroups_.end(); }

  std::optional<std::size_t> find(const ElementSet& members) const;
  // Throws Error when h is not in the list.
  std::size_t position(const Subgroup& h) const;

 private:
  const FiniteGroup* group_;
  std::vector<Subgroup> subgroups_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

// Cyclic extension: start from all cyclic subgroups and join every new
// subgroup with every cyclic generator until nothing new appears.
// Throws LatticeCapExceeded beyond `cap` subgroups.
SubgroupLattice all_subgroups(const FiniteGroup& g, std::size_t cap = kDefaultSubgroupCap,
                              kernels::Exec exec = kernels::Exec::Parallel);

// Empty for the trivial group, which has no maximal subgroups.
std::vector<Subgroup> maximal_subgroups(const SubgroupLattice& lattice);
std::vector<Subgroup> normal_subgroups(const SubgroupLattice& lattice);

Subgroup normalizer(const Subgroup& h);
// N_K(H) = N_G(H) ∩ K
Subgroup normalizer_in(const Subgroup& k, const Subgroup& h);
Subgroup centralizer(const ElementSubset& s);
Subgroup centralizer(const Subgroup& h);
Subgroup core(const Subgroup& h);
Subgroup normal_closure(const Subgroup& h);
// <H^x : x in K>
Subgroup normal_closure_in(const Subgroup& k, const Subgroup& h);

// Distinct conjugates H^x, x in G, in first-seen order.
std::vector<Subgroup> conjugates(const Subgroup& h);

// Throws TrivialGroup for |G| = 1.
std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g);

struct SubgroupClass {
  std::size_t representative;          // lattice position of the lexicographically least member
  std::vector<std::size_t> members;    // lattice positions, ascending
};

std::vector<SubgroupClass> conjugacy_classes(const SubgroupLattice& lattice);

/// The canonical map G -> G/N, with G/N realised as the action of G on the
/// right cosets of N.
struct Epimorphism {
  const FiniteGroup* source = nullptr;
  ElementSet kernel;
  GroupPtr target;
  std::vector<Index> image_of;

  const FiniteGroup& domain() const { return *source; }
  const FiniteGroup& codomain() const { return *target; }
  Subgroup kernel_subgroup() const { return Subgroup(*source, kernel); }
};

// Throws NotNormal unless n is normal in its parent.
Epimorphism quotient(const Subgroup& n);
Subgroup image(const Epimorphism& e, const Subgroup& h);
Subgroup preimage(const Epimorphism& e, const Subgroup& t);

}  // namespace cpg
