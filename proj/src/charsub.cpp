#include "cpg/charsub.hpp"

#include <unordered_set>

#include "cpg/errors.hpp"

namespace cpg {

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::size_t p_part(std::size_t n, std::size_t p) {
  std::size_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

bool is_prime_power(std::size_t n) { return n > 1 && prime_divisors(n).size() == 1; }

Subgroup center(const FiniteGroup& g) { return centralizer(whole_group(g)); }

std::vector<Subgroup> upper_central_series(const FiniteGroup& g) {
  std::vector<Subgroup> series{center(g)};
  while (!series.back().is_whole()) {
    const Subgroup& last = series.back();
    Epimorphism e = quotient(last);
    Subgroup next = preimage(e, center(e.codomain()));
    if (next.order() == last.order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

Subgroup hypercenter(const FiniteGroup& g) { return upper_central_series(g).back(); }

Subgroup derived_subgroup(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  const auto gens = generators(h);
  std::vector<Index> commutators;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      commutators.push_back(g.commutator(gens[i], gens[j]));
    }
  }
  return normal_closure_in(h, generate(g, commutators));
}

Subgroup derived_subgroup(const FiniteGroup& g) { return derived_subgroup(whole_group(g)); }

std::vector<Subgroup> derived_series(const FiniteGroup& g) {
  std::vector<Subgroup> series{whole_group(g)};
  while (true) {
    Subgroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

Subgroup sylow_subgroup(const Subgroup& h, std::size_t p) {
  const FiniteGroup& g = h.parent();
  const std::size_t target = p_part(h.order(), p);
  Subgroup s = trivial_subgroup(g);
  while (s.order() < target) {
    // N_H(S)/S has an element of order p: pick x with x not in S and x^p in S
    Subgroup n = normalizer_in(h, s);
    std::optional<Index> pick;
    n.members().for_each([&](Index x) {
      if (pick || s.contains(x)) return;
      if (s.contains(g.pow(x, p))) pick = x;
    });
    if (!pick) throw Error("Sylow growth failed; group arithmetic is inconsistent");
    s = join(s, *pick);
  }
  return s;
}

std::vector<Subgroup> sylow_subgroups(const Subgroup& h, std::size_t p) {
  const FiniteGroup& g = h.parent();
  Subgroup first = sylow_subgroup(h, p);
  std::vector<Subgroup> out;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  const auto norm = normalizer_in(h, first);
  ElementSet done(g.order());
  h.members().for_each([&](Index x) {
    if (done.contains(x)) return;
    norm.members().for_each([&](Index n) { done.insert(g.mul(n, x)); });
    Subgroup c = conjugate(first, x);
    if (seen.insert(c.members()).second) out.push_back(std::move(c));
  });
  return out;
}

std::vector<Subgroup> sylow_subgroups(const FiniteGroup& g, std::size_t p) {
  return sylow_subgroups(whole_group(g), p);
}

Subgroup p_core(const FiniteGroup& g, std::size_t p) {
  auto sylows = sylow_subgroups(g, p);
  ElementSet acc = sylows.front().members();
  for (const auto& s : sylows) acc &= s.members();
  return Subgroup(g, std::move(acc));
}

bool subgroup_is_nilpotent(const Subgroup& h) {
  for (std::size_t p : prime_divisors(h.order())) {
    if (!is_normal_in(sylow_subgroup(h, p), h)) return false;
  }
  return true;
}

Subgroup fitting(const FiniteGroup& g) {
  Subgroup f = trivial_subgroup(g);
  for (std::size_t p : prime_divisors(g.order())) f = join(f, p_core(g, p));
  return f;
}

Subgroup fitting_from_lattice(const SubgroupLattice& lattice) {
  const Subgroup* best = &lattice[0];
  for (const auto& h : lattice) {
    if (h.order() > best->order() && is_normal(h) && subgroup_is_nilpotent(h)) best = &h;
  }
  return *best;
}

Subgroup frattini(const SubgroupLattice& lattice) {
  const FiniteGroup& g = lattice.group();
  auto maximals = maximal_subgroups(lattice);
  if (maximals.empty()) return trivial_subgroup(g);
  ElementSet acc = maximals.front().members();
  for (const auto& m : maximals) acc &= m.members();
  return Subgroup(g, std::move(acc));
}

Subgroup frattini(const FiniteGroup& g) { return frattini(all_subgroups(g)); }

Subgroup socle(const FiniteGroup& g) {
  Subgroup s = trivial_subgroup(g);
  if (g.order() == 1) return s;
  for (const auto& n : minimal_normal_subgroups(g)) s = join(s, n);
  return s;
}

Subgroup f_star(const FiniteGroup& g) {
  const Subgroup f = fitting(g);
  const Subgroup k = join(centralizer(f), f);
  const Epimorphism e = quotient(f);
  // socle of K/F taken inside K/F itself, then pulled back into G
  const Subgroup kbar = image(e, k);
  const Embedding emb = as_group(kbar);
  const Subgroup soc = emb.lift(socle(*emb.group));
  return intersection(preimage(e, soc), k);
}

Subgroup f_tilde(const Subgroup& frattini_subgroup) {
  const Epimorphism e = quotient(frattini_subgroup);
  return preimage(e, socle(e.codomain()));
}

Subgroup f_tilde(const SubgroupLattice& lattice) {
  return f_tilde(frattini(lattice));
}

CharacteristicProfile characteristic_profile(const SubgroupLattice& lattice) {
  const FiniteGroup& g = lattice.group();
  Subgroup phi = frattini(lattice);
  CharacteristicProfile profile{
      center(g),       hypercenter(g), derived_subgroup(g), fitting(g),
      phi,             socle(g),       f_star(g),           f_tilde(phi),
      {}};
  for (std::size_t p : prime_divisors(g.order())) profile.sylow.emplace(p, sylow_subgroups(g, p));
  return profile;
}

}  // namespace cpg
