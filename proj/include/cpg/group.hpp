#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "cpg/element_set.hpp"
#include "cpg/permutation.hpp"

namespace cpg {

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

inline constexpr std::size_t kDefaultOrderCap = 10000;
// Groups up to this order get a full multiplication table at construction.
inline constexpr std::size_t kTableLimit = 2048;

/// A fully enumerated permutation group. Immutable once built; every query
/// is const and safe to call from several threads.
///
/// Elements are indexed in breadth-first discovery order from the identity,
/// so index 0 is always the identity.
class FiniteGroup {
 public:
  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

  std::size_t degree() const noexcept { return degree_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  // Indices of the (non-identity, deduplicated) generators.
  std::span<const Index> generator_indices() const noexcept { return generator_indices_; }

  const Permutation& element(Index i) const { return elements_[i]; }
  std::optional<Index> index_of(const Permutation& p) const;
  static constexpr Index identity() noexcept { return 0; }

  Index mul(Index a, Index b) const {
    if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elements_.size() + b];
    return mul_slow(a, b);
  }
  Index inv(Index a) const { return inverse_[a]; }
  // h^x = x^-1 h x
  Index conj(Index h, Index x) const { return mul(mul(inverse_[x], h), x); }
  // [a, b] = a^-1 b^-1 a b
  Index commutator(Index a, Index b) const { return mul(mul(inverse_[a], inverse_[b]), mul(a, b)); }
  Index pow(Index a, std::size_t e) const;
  std::size_t element_order(Index a) const { return element_orders_[a]; }

  bool has_table() const noexcept { return !table_.empty(); }

  friend GroupPtr closure(std::size_t degree, std::vector<Permutation> generators, std::size_t cap);

 private:
  FiniteGroup() = default;
  Index mul_slow(Index a, Index b) const;

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Index> generator_indices_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, Index, PermutationHash> index_;
  std::vector<Index> inverse_;
  std::vector<Index> table_;
  std::vector<std::size_t> element_orders_;
};

// Breadth-first product closure of the generators. Throws ClosureCapExceeded
// when more than `cap` elements appear, DegreeMismatch on a bad generator.
GroupPtr closure(std::size_t degree, std::vector<Permutation> generators,
                 std::size_t cap = kDefaultOrderCap);

// Acts on the disjoint union of the point sets, first factor on the low points.
GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b,
                        std::size_t cap = kDefaultOrderCap);

/// A subgroup of a FiniteGroup, stored as a member bitset. The parent must
/// outlive the handle. Generators are kept when known so joins stay cheap.
class Subgroup {
 public:
  Subgroup(const FiniteGroup& parent, ElementSet members, std::vector<Index> generators = {})
      : parent_(&parent), members_(std::move(members)), generators_(std::move(generators)) {}

  const FiniteGroup& parent() const noexcept { return *parent_; }
  const ElementSet& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.count(); }
  bool contains(Index i) const noexcept { return members_.contains(i); }
  bool is_trivial() const noexcept { return order() == 1; }
  bool is_whole() const noexcept { return order() == parent_->order(); }
  bool is_subgroup_of(const Subgroup& other) const noexcept {
    return members_.is_subset_of(other.members_);
  }
  // Generators recorded at construction; may be empty for non-trivial groups.
  const std::vector<Index>& known_generators() const noexcept { return generators_; }

  friend bool operator==(const Subgroup& a, const Subgroup& b) noexcept {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  const FiniteGroup* parent_;
  ElementSet members_;
  std::vector<Index> generators_;
};

/// An arbitrary subset of a group (no closure requirement).
class ElementSubset {
 public:
  ElementSubset(const FiniteGroup& parent, ElementSet members)
      : parent_(&parent), members_(std::move(members)) {}
  explicit ElementSubset(const Subgroup& h) : parent_(&h.parent()), members_(h.members()) {}

  const FiniteGroup& parent() const noexcept { return *parent_; }
  const ElementSet& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.count(); }
  bool contains(Index i) const noexcept { return members_.contains(i); }

  friend bool operator==(const ElementSubset& a, const ElementSubset& b) noexcept {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  const FiniteGroup* parent_;
  ElementSet members_;
};

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

// Smallest subgroup containing `gens`.
Subgroup generate(const FiniteGroup& g, std::span<const Index> gens);
Subgroup cyclic_subgroup(const FiniteGroup& g, Index x);

// A small generating set (greedy over increasing indices, or the recorded one).
std::vector<Index> generators(const Subgroup& h);

Subgroup join(const Subgroup& h, const Subgroup& k);
Subgroup join(const Subgroup& h, Index x);
Subgroup intersection(const Subgroup& h, const Subgroup& k);

// H^x = { x^-1 h x : h in H }
Subgroup conjugate(const Subgroup& h, Index x);

// { hk : h in H, k in K }
ElementSubset set_product(const Subgroup& h, const Subgroup& k);
ElementSubset set_product(const ElementSubset& a, const ElementSubset& b);

// HK == KH
bool permutes(const Subgroup& h, const Subgroup& k);

bool is_normal(const Subgroup& h);
// H normal in K (both inside the same parent).
bool is_normal_in(const Subgroup& h, const Subgroup& k);

// Checks that a member set is a subgroup (contains 1, closed under products).
bool is_closed_subgroup(const FiniteGroup& g, const ElementSet& members);

/// A subgroup re-enumerated as a group in its own right, with the index map
/// back into the parent.
struct Embedding {
  const FiniteGroup* parent = nullptr;
  GroupPtr group;
  std::vector<Index> to_parent;             // index in `group` -> index in parent
  std::unordered_map<Index, Index> from_parent;

  Subgroup lift(const Subgroup& inner) const;
  Subgroup restrict(const Subgroup& outer) const;  // outer must lie inside the image
};

Embedding as_group(const Subgroup& h);

}  // namespace cpg
