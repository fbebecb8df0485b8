#include "cpg/group.hpp"

#include <algorithm>
#include <string>

#include "cpg/errors.hpp"

namespace cpg {

GroupPtr closure(std::size_t degree, std::vector<Permutation> generators, std::size_t cap) {
  if (cap < 1) throw Error("closure cap must be at least 1");
  for (const auto& g : generators) {
    if (g.degree() != degree) {
      throw DegreeMismatch("generator of degree " + std::to_string(g.degree()) +
                           " in a group of degree " + std::to_string(degree));
    }
  }

  std::shared_ptr<FiniteGroup> group(new FiniteGroup());
  FiniteGroup& G = *group;
  G.degree_ = degree;
  G.generators_ = std::move(generators);

  G.elements_.push_back(Permutation::identity(degree));
  G.index_.emplace(G.elements_.back(), 0);
  for (std::size_t i = 0; i < G.elements_.size(); ++i) {
    for (const auto& gen : G.generators_) {
      Permutation p = compose(G.elements_[i], gen);
      if (G.index_.contains(p)) continue;
      if (G.elements_.size() >= cap) throw ClosureCapExceeded(cap);
      G.index_.emplace(p, static_cast<Index>(G.elements_.size()));
      G.elements_.push_back(std::move(p));
    }
  }

  for (const auto& gen : G.generators_) {
    Index i = G.index_.at(gen);
    if (i != FiniteGroup::identity() &&
        std::find(G.generator_indices_.begin(), G.generator_indices_.end(), i) ==
            G.generator_indices_.end()) {
      G.generator_indices_.push_back(i);
    }
  }

  const std::size_t n = G.elements_.size();
  G.inverse_.resize(n);
  for (std::size_t i = 0; i < n; ++i) G.inverse_[i] = G.index_.at(inverse(G.elements_[i]));

  if (n <= kTableLimit) {
    G.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        G.table_[a * n + b] = G.index_.at(compose(G.elements_[a], G.elements_[b]));
      }
    }
  }

  G.element_orders_.resize(n);
  for (std::size_t i = 0; i < n; ++i) G.element_orders_[i] = order(G.elements_[i]);

  return group;
}

std::optional<Index> FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index FiniteGroup::mul_slow(Index a, Index b) const {
  return index_.at(compose(elements_[a], elements_[b]));
}

Index FiniteGroup::pow(Index a, std::size_t e) const {
  Index result = identity();
  Index base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b, std::size_t cap) {
  const std::size_t degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) gens.push_back(pad(g, degree, 0));
  for (const auto& g : b.generators()) gens.push_back(pad(g, degree, a.degree()));
  return closure(degree, std::move(gens), cap);
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  ElementSet s(g.order());
  s.insert(FiniteGroup::identity());
  return Subgroup(g, std::move(s));
}

Subgroup whole_group(const FiniteGroup& g) {
  auto gi = g.generator_indices();
  return Subgroup(g, ElementSet::full(g.order()), std::vector<Index>(gi.begin(), gi.end()));
}

Subgroup generate(const FiniteGroup& g, std::span<const Index> gens) {
  std::vector<Index> kept;
  for (Index x : gens) {
    if (x != FiniteGroup::identity() && std::find(kept.begin(), kept.end(), x) == kept.end()) {
      kept.push_back(x);
    }
  }
  ElementSet members(g.order());
  std::vector<Index> queue{FiniteGroup::identity()};
  members.insert(FiniteGroup::identity());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Index x : kept) {
      Index p = g.mul(queue[i], x);
      if (members.add(p)) queue.push_back(p);
    }
  }
  return Subgroup(g, std::move(members), std::move(kept));
}

Subgroup cyclic_subgroup(const FiniteGroup& g, Index x) {
  Index one[] = {x};
  return generate(g, one);
}

std::vector<Index> generators(const Subgroup& h) {
  if (!h.known_generators().empty() || h.is_trivial()) return h.known_generators();
  const FiniteGroup& g = h.parent();
  std::vector<Index> gens;
  ElementSet span(g.order());
  span.insert(FiniteGroup::identity());
  std::vector<Index> list{FiniteGroup::identity()};
  h.members().for_each([&](Index x) {
    if (span.contains(x)) return;
    gens.push_back(x);
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (Index y : gens) {
        Index p = g.mul(list[i], y);
        if (span.add(p)) list.push_back(p);
      }
    }
  });
  return gens;
}

Subgroup join(const Subgroup& h, const Subgroup& k) {
  if (k.is_subgroup_of(h)) return h;
  if (h.is_subgroup_of(k)) return k;
  auto gens = generators(h);
  auto more = generators(k);
  gens.insert(gens.end(), more.begin(), more.end());
  return generate(h.parent(), gens);
}

Subgroup join(const Subgroup& h, Index x) {
  if (h.contains(x)) return h;
  auto gens = generators(h);
  gens.push_back(x);
  return generate(h.parent(), gens);
}

Subgroup intersection(const Subgroup& h, const Subgroup& k) {
  return Subgroup(h.parent(), h.members() & k.members());
}

Subgroup conjugate(const Subgroup& h, Index x) {
  const FiniteGroup& g = h.parent();
  ElementSet members(g.order());
  h.members().for_each([&](Index m) { members.insert(g.conj(m, x)); });
  std::vector<Index> gens;
  for (Index s : h.known_generators()) gens.push_back(g.conj(s, x));
  return Subgroup(g, std::move(members), std::move(gens));
}

ElementSubset set_product(const Subgroup& h, const Subgroup& k) {
  const FiniteGroup& g = h.parent();
  ElementSet out(g.order());
  auto ks = k.members().to_vector();
  // once h lies in HK its whole coset hK is already present
  h.members().for_each([&](Index x) {
    if (out.contains(x)) return;
    for (Index y : ks) out.insert(g.mul(x, y));
  });
  return ElementSubset(g, std::move(out));
}

ElementSubset set_product(const ElementSubset& a, const ElementSubset& b) {
  const FiniteGroup& g = a.parent();
  ElementSet out(g.order());
  auto bs = b.members().to_vector();
  a.members().for_each([&](Index x) {
    for (Index y : bs) out.insert(g.mul(x, y));
  });
  return ElementSubset(g, std::move(out));
}

bool permutes(const Subgroup& h, const Subgroup& k) {
  if (h.is_subgroup_of(k) || k.is_subgroup_of(h)) return true;
  return set_product(h, k) == set_product(k, h);
}

bool is_normal(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  auto hs = generators(h);
  for (Index x : g.generator_indices()) {
    for (Index s : hs) {
      if (!h.contains(g.conj(s, x))) return false;
    }
  }
  return true;
}

bool is_normal_in(const Subgroup& h, const Subgroup& k) {
  if (!h.is_subgroup_of(k)) return false;
  const FiniteGroup& g = h.parent();
  auto hs = generators(h);
  for (Index x : generators(k)) {
    for (Index s : hs) {
      if (!h.contains(g.conj(s, x))) return false;
    }
  }
  return true;
}

bool is_closed_subgroup(const FiniteGroup& g, const ElementSet& members) {
  if (!members.contains(FiniteGroup::identity())) return false;
  auto list = members.to_vector();
  for (Index a : list) {
    for (Index b : list) {
      if (!members.contains(g.mul(a, b))) return false;
    }
  }
  return true;
}

Embedding as_group(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  std::vector<Permutation> perms;
  for (Index x : generators(h)) perms.push_back(g.element(x));
  Embedding e;
  e.parent = &g;
  e.group = closure(g.degree(), std::move(perms), h.order());
  e.to_parent.resize(e.group->order());
  for (std::size_t i = 0; i < e.group->order(); ++i) {
    Index p = *g.index_of(e.group->element(static_cast<Index>(i)));
    e.to_parent[i] = p;
    e.from_parent.emplace(p, static_cast<Index>(i));
  }
  return e;
}

Subgroup Embedding::lift(const Subgroup& inner) const {
  ElementSet members(parent->order());
  inner.members().for_each([&](Index i) { members.insert(to_parent[i]); });
  std::vector<Index> gens;
  for (Index s : inner.known_generators()) gens.push_back(to_parent[s]);
  return Subgroup(*parent, std::move(members), std::move(gens));
}

Subgroup Embedding::restrict(const Subgroup& outer) const {
  ElementSet members(group->order());
  outer.members().for_each([&](Index i) { members.insert(from_parent.at(i)); });
  std::vector<Index> gens;
  for (Index s : outer.known_generators()) gens.push_back(from_parent.at(s));
  return Subgroup(*group, std::move(members), std::move(gens));
}

}  // namespace cpg
