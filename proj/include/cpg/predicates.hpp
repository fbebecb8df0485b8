#pragma once

#include <cstddef>
#include <vector>

#include "cpg/group.hpp"
#include "cpg/lattice.hpp"

namespace cpg {

inline constexpr std::size_t kDefaultPairCap = 200000;

// 1 = N_0 < N_1 < ... < N_k = G, each N_i normal in G, no normal subgroup of
// G strictly between consecutive terms.
struct ChiefSeries {
  std::vector<Subgroup> terms;

  std::vector<std::size_t> factor_orders() const;
};

// Which minimal normal subgroup of the current quotient to take next,
// compared on the pulled-back member sets in G.
enum class TieBreak { LexLeast, LexGreatest };

ChiefSeries chief_series(const FiniteGroup& g, TieBreak tie = TieBreak::LexLeast);

// Every Sylow subgroup is normal.
bool is_nilpotent(const FiniteGroup& g);
bool is_soluble(const FiniteGroup& g);
bool is_supersoluble(const FiniteGroup& g, TieBreak tie = TieBreak::LexLeast);
bool is_metanilpotent(const FiniteGroup& g);
bool is_quasinilpotent(const FiniteGroup& g);

// Class tests applied to a subgroup viewed as a group in its own right.
bool subgroup_is_soluble(const Subgroup& h);
bool subgroup_is_supersoluble(const Subgroup& h);

/// Independent nilpotency tests; on every finite group they must agree.
struct NilpotencyCharacterizations {
  bool sylows_normal = false;
  bool direct_product_of_sylows = false;
  bool normalizers_grow = false;       // every proper subgroup is smaller than its normalizer
  bool maximal_subgroups_normal = false;
  bool all_subgroups_subnormal = false;
  bool hypercenter_is_whole = false;

  bool agree() const;
};

NilpotencyCharacterizations nilpotency_characterizations(const SubgroupLattice& lattice);

bool is_subnormal(const Subgroup& h);
bool is_subnormal_in(const Subgroup& k, const Subgroup& h);
bool is_pronormal(const Subgroup& h);
bool is_pronormal_in(const Subgroup& k, const Subgroup& h);
bool is_abnormal(const Subgroup& h);
bool is_quasinormal(const SubgroupLattice& lattice, const Subgroup& h);
bool is_s_permutable(const Subgroup& h);
bool is_s_permutable(const Subgroup& h, const std::vector<Subgroup>& all_sylows);
bool is_conjugate_permutable(const Subgroup& h);
bool is_r_conjugate_permutable(const Subgroup& h, const ElementSubset& r);

// All Sylow subgroups of G for every prime dividing |G|.
std::vector<Subgroup> all_sylow_subgroups(const FiniteGroup& g);

struct Factorization {
  Subgroup a;
  Subgroup b;
};

// Unordered pairs {A, B} of nilpotent subgroups with AB = G. Throws
// SearchCapExceeded when more than `limit` candidate pairs would be examined.
std::vector<Factorization> dinilpotent_factorizations(const SubgroupLattice& lattice,
                                                      std::size_t limit = kDefaultPairCap);

}  // namespace cpg
