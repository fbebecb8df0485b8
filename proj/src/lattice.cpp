#include "cpg/lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "cpg/errors.hpp"

namespace cpg {

SubgroupLattice::SubgroupLattice(const FiniteGroup& g, std::vector<Subgroup> subgroups)
    : group_(&g), subgroups_(std::move(subgroups)) {
  std::vector<std::pair<std::vector<Index>, std::size_t>> keys;
  keys.reserve(subgroups_.size());
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    keys.emplace_back(subgroups_[i].members().to_vector(), i);
  }
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<Subgroup> sorted;
  sorted.reserve(subgroups_.size());
  for (const auto& [members, i] : keys) sorted.push_back(std::move(subgroups_[i]));
  subgroups_ = std::move(sorted);
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    if (!index_.emplace(subgroups_[i].members(), i).second) {
      throw Error("duplicate subgroup in lattice");
    }
  }
}

std::optional<std::size_t> SubgroupLattice::find(const ElementSet& members) const {
  auto it = index_.find(members);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SubgroupLattice::position(const Subgroup& h) const {
  auto pos = find(h.members());
  if (!pos) throw Error("subgroup not found in lattice");
  return *pos;
}

SubgroupLattice all_subgroups(const FiniteGroup& g, std::size_t cap, kernels::Exec exec) {
  if (cap < 1) throw Error("subgroup cap must be at least 1");
  std::unordered_set<ElementSet, ElementSetHash> known;
  std::vector<Subgroup> found;
  std::vector<Index> cyclic_generators;

  auto record = [&](Subgroup h) -> bool {
    if (!known.insert(h.members()).second) return false;
    if (known.size() > cap) throw LatticeCapExceeded(cap);
    found.push_back(std::move(h));
    return true;
  };

  record(trivial_subgroup(g));
  std::vector<Subgroup> frontier;
  for (Index x = 1; x < g.order(); ++x) {
    Subgroup c = cyclic_subgroup(g, x);
    if (known.contains(c.members())) continue;
    cyclic_generators.push_back(x);
    record(c);
    frontier.push_back(std::move(c));
  }

  while (!frontier.empty()) {
    auto joins = kernels::extend_frontier(frontier, cyclic_generators, exec);
    std::vector<Subgroup> next;
    for (auto& list : joins) {
      for (auto& j : list) {
        if (known.contains(j.members())) continue;
        record(j);
        next.push_back(std::move(j));
      }
    }
    frontier = std::move(next);
  }
  return SubgroupLattice(g, std::move(found));
}

std::vector<Subgroup> maximal_subgroups(const SubgroupLattice& lattice) {
  std::vector<Subgroup> out;
  const std::size_t n = lattice.size();
  if (n < 2) return out;
  // the last entry is G itself; anything contained in no larger proper subgroup is maximal
  for (std::size_t i = 0; i + 1 < n; ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j + 1 < n && maximal; ++j) {
      if (lattice[j].order() > lattice[i].order() && lattice[i].is_subgroup_of(lattice[j])) {
        maximal = false;
      }
    }
    if (maximal) out.push_back(lattice[i]);
  }
  return out;
}

std::vector<Subgroup> normal_subgroups(const SubgroupLattice& lattice) {
  std::vector<Subgroup> out;
  for (const auto& h : lattice) {
    if (is_normal(h)) out.push_back(h);
  }
  return out;
}

Subgroup normalizer(const Subgroup& h) { return normalizer_in(whole_group(h.parent()), h); }

Subgroup normalizer_in(const Subgroup& k, const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  const auto hs = generators(h);
  ElementSet out(g.order());
  k.members().for_each([&](Index x) {
    for (Index s : hs) {
      if (!h.contains(g.conj(s, x))) return;
    }
    out.insert(x);
  });
  return Subgroup(g, std::move(out));
}

Subgroup centralizer(const ElementSubset& s) {
  const FiniteGroup& g = s.parent();
  const auto list = s.members().to_vector();
  ElementSet out(g.order());
  for (Index x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Index y : list) {
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(x);
  }
  return Subgroup(g, std::move(out));
}

Subgroup centralizer(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  ElementSet gens(g.order());
  for (Index s : generators(h)) gens.insert(s);
  return centralizer(ElementSubset(g, std::move(gens)));
}

Subgroup core(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  ElementSet acc = h.members();
  for (Index x = 0; x < g.order(); ++x) {
    acc &= conjugate(h, x).members();
    if (acc.count() == 1) break;
  }
  return Subgroup(g, std::move(acc));
}

Subgroup normal_closure(const Subgroup& h) { return normal_closure_in(whole_group(h.parent()), h); }

Subgroup normal_closure_in(const Subgroup& k, const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  const auto ks = generators(k);
  Subgroup n = h;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Index x : ks) {
      for (Index s : generators(n)) {
        Index c = g.conj(s, x);
        if (!n.contains(c)) {
          n = join(n, c);
          grew = true;
        }
      }
    }
  }
  return n;
}

std::vector<Subgroup> conjugates(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  std::vector<Subgroup> out;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (Index x = 0; x < g.order(); ++x) {
    Subgroup c = conjugate(h, x);
    if (seen.insert(c.members()).second) out.push_back(std::move(c));
  }
  return out;
}

std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& g) {
  if (g.order() == 1) throw TrivialGroup("the trivial group has no minimal normal subgroups");
  // every minimal normal subgroup is the normal closure of any of its non-identity elements
  std::vector<Subgroup> candidates;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  ElementSet covered(g.order());
  for (Index x = 1; x < g.order(); ++x) {
    if (covered.contains(x)) continue;
    Subgroup n = normal_closure(cyclic_subgroup(g, x));
    // conjugates of x share the normal closure
    for (Index y = 0; y < g.order(); ++y) covered.insert(g.conj(x, y));
    if (seen.insert(n.members()).second) candidates.push_back(std::move(n));
  }
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < candidates.size() && minimal; ++j) {
      if (j != i && candidates[j].order() < candidates[i].order() &&
          candidates[j].is_subgroup_of(candidates[i])) {
        minimal = false;
      }
    }
    if (minimal) out.push_back(candidates[i]);
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members().lex_less(b.members());
  });
  return out;
}

std::vector<SubgroupClass> conjugacy_classes(const SubgroupLattice& lattice) {
  std::vector<bool> assigned(lattice.size(), false);
  std::vector<SubgroupClass> out;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (assigned[i]) continue;
    SubgroupClass cls{i, {}};
    for (const auto& c : conjugates(lattice[i])) {
      std::size_t pos = lattice.position(c);
      assigned[pos] = true;
      cls.members.push_back(pos);
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = cls.members.front();
    out.push_back(std::move(cls));
  }
  return out;
}

Epimorphism quotient(const Subgroup& n) {
  if (!is_normal(n)) throw NotNormal("quotient by a subgroup that is not normal");
  const FiniteGroup& g = n.parent();
  const auto kernel = n.members().to_vector();

  // right cosets Nx
  constexpr Index kUnassigned = static_cast<Index>(-1);
  std::vector<Index> coset_of(g.order(), kUnassigned);
  std::vector<Index> reps;
  for (Index x = 0; x < g.order(); ++x) {
    if (coset_of[x] != kUnassigned) continue;
    const Index id = static_cast<Index>(reps.size());
    reps.push_back(x);
    for (Index k : kernel) coset_of[g.mul(k, x)] = id;
  }
  const std::size_t index = reps.size();

  auto action = [&](Index x) {
    std::vector<Point> images(index);
    for (std::size_t c = 0; c < index; ++c) images[c] = coset_of[g.mul(reps[c], x)];
    return Permutation(std::move(images));
  };

  std::vector<Permutation> target_gens;
  for (Index x : g.generator_indices()) target_gens.push_back(action(x));

  Epimorphism e;
  e.source = &g;
  e.kernel = n.members();
  e.target = closure(index, std::move(target_gens), std::max<std::size_t>(index, 1));

  const auto gens = g.generator_indices();
  std::vector<Index> gen_images;
  for (const auto& p : e.target->generators()) gen_images.push_back(*e.target->index_of(p));

  // the homomorphism is determined on generators; spread it along a BFS of G
  e.image_of.assign(g.order(), kUnassigned);
  e.image_of[FiniteGroup::identity()] = FiniteGroup::identity();
  std::vector<Index> queue{FiniteGroup::identity()};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    Index x = queue[q];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Index y = g.mul(x, gens[i]);
      if (e.image_of[y] != kUnassigned) continue;
      e.image_of[y] = e.target->mul(e.image_of[x], gen_images[i]);
      queue.push_back(y);
    }
  }
  return e;
}

Subgroup image(const Epimorphism& e, const Subgroup& h) {
  ElementSet members(e.target->order());
  h.members().for_each([&](Index x) { members.insert(e.image_of[x]); });
  std::vector<Index> gens;
  for (Index s : h.known_generators()) {
    Index t = e.image_of[s];
    if (t != FiniteGroup::identity()) gens.push_back(t);
  }
  if (gens.empty() && members.count() > 1) return Subgroup(*e.target, std::move(members));
  return Subgroup(*e.target, std::move(members), std::move(gens));
}

Subgroup preimage(const Epimorphism& e, const Subgroup& t) {
  ElementSet members(e.source->order());
  for (Index x = 0; x < e.source->order(); ++x) {
    if (t.contains(e.image_of[x])) members.insert(x);
  }
  return Subgroup(*e.source, std::move(members));
}

}  // namespace cpg
