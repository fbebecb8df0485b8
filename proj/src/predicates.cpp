#include "cpg/predicates.hpp"

#include <unordered_set>

#include "cpg/charsub.hpp"
#include "cpg/errors.hpp"
#include "cpg/kernels.hpp"

namespace cpg {

std::vector<std::size_t> ChiefSeries::factor_orders() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < terms.size(); ++i) out.push_back(terms[i].order() / terms[i - 1].order());
  return out;
}

ChiefSeries chief_series(const FiniteGroup& g, TieBreak tie) {
  ChiefSeries series{{trivial_subgroup(g)}};
  const Subgroup whole = whole_group(g);
  while (!series.terms.back().is_whole()) {
    const Subgroup& n = series.terms.back();
    std::vector<Subgroup> candidates;
    std::unordered_set<ElementSet, ElementSetHash> seen;
    ElementSet covered = n.members();
    for (Index x = 0; x < g.order(); ++x) {
      if (covered.contains(x)) continue;
      for (Index y = 0; y < g.order(); ++y) covered.insert(g.conj(x, y));
      Subgroup m = normal_closure_in(whole, join(n, x));
      if (seen.insert(m.members()).second) candidates.push_back(std::move(m));
    }
    const Subgroup* pick = nullptr;
    for (const auto& c : candidates) {
      bool minimal = true;
      for (const auto& d : candidates) {
        if (d.order() < c.order() && d.is_subgroup_of(c)) {
          minimal = false;
          break;
        }
      }
      if (!minimal) continue;
      if (!pick) {
        pick = &c;
      } else if (tie == TieBreak::LexLeast ? c.members().lex_less(pick->members())
                                           : pick->members().lex_less(c.members())) {
        pick = &c;
      }
    }
    series.terms.push_back(*pick);
  }
  return series;
}

bool is_nilpotent(const FiniteGroup& g) { return subgroup_is_nilpotent(whole_group(g)); }

bool is_soluble(const FiniteGroup& g) { return derived_series(g).back().is_trivial(); }

bool is_supersoluble(const FiniteGroup& g, TieBreak tie) {
  for (std::size_t f : chief_series(g, tie).factor_orders()) {
    if (prime_divisors(f) != std::vector<std::size_t>{f}) return false;
  }
  return true;
}

bool is_metanilpotent(const FiniteGroup& g) {
  Epimorphism e = quotient(fitting(g));
  return is_nilpotent(e.codomain());
}

bool is_quasinilpotent(const FiniteGroup& g) {
  ChiefSeries series = chief_series(g);
  for (std::size_t i = 1; i < series.terms.size(); ++i) {
    const Subgroup& lower = series.terms[i - 1];
    const Subgroup& upper = series.terms[i];
    const auto hs = generators(upper);
    // C_G(H/K) = { x : h^-1 h^x in K for every generator h of H }
    ElementSet c(g.order());
    for (Index x = 0; x < g.order(); ++x) {
      bool central = true;
      for (Index h : hs) {
        if (!lower.contains(g.mul(g.inv(h), g.conj(h, x)))) {
          central = false;
          break;
        }
      }
      if (central) c.insert(x);
    }
    Subgroup cs(g, std::move(c));
    if (!join(cs, upper).is_whole()) return false;
  }
  return true;
}

bool subgroup_is_soluble(const Subgroup& h) {
  Subgroup d = h;
  while (!d.is_trivial()) {
    Subgroup next = derived_subgroup(d);
    if (next.order() == d.order()) return false;
    d = std::move(next);
  }
  return true;
}

bool subgroup_is_supersoluble(const Subgroup& h) {
  if (h.is_whole()) return is_supersoluble(h.parent());
  return is_supersoluble(*as_group(h).group);
}

bool NilpotencyCharacterizations::agree() const {
  return sylows_normal == direct_product_of_sylows && sylows_normal == normalizers_grow &&
         sylows_normal == maximal_subgroups_normal && sylows_normal == all_subgroups_subnormal &&
         sylows_normal == hypercenter_is_whole;
}

NilpotencyCharacterizations nilpotency_characterizations(const SubgroupLattice& lattice) {
  const FiniteGroup& g = lattice.group();
  NilpotencyCharacterizations out;

  out.sylows_normal = true;
  std::vector<Subgroup> one_per_prime;
  for (std::size_t p : prime_divisors(g.order())) {
    one_per_prime.push_back(sylow_subgroup(whole_group(g), p));
    if (!is_normal(one_per_prime.back())) out.sylows_normal = false;
  }

  // G is the internal direct product of one Sylow subgroup per prime: the
  // factors commute elementwise and their product set is all of G
  {
    bool ok = true;
    for (std::size_t i = 0; i < one_per_prime.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < one_per_prime.size() && ok; ++j) {
        for (Index a : generators(one_per_prime[i])) {
          for (Index b : generators(one_per_prime[j])) {
            if (g.mul(a, b) != g.mul(b, a)) ok = false;
          }
        }
      }
    }
    if (ok) {
      ElementSubset product(trivial_subgroup(g));
      for (const auto& p : one_per_prime) product = set_product(product, ElementSubset(p));
      ok = product.size() == g.order();
    }
    out.direct_product_of_sylows = ok;
  }

  out.normalizers_grow = true;
  out.maximal_subgroups_normal = true;
  out.all_subgroups_subnormal = true;
  for (std::size_t i = 0; i + 1 < lattice.size(); ++i) {
    if (normalizer(lattice[i]).order() == lattice[i].order()) out.normalizers_grow = false;
    if (!is_subnormal(lattice[i])) out.all_subgroups_subnormal = false;
  }
  for (const auto& m : maximal_subgroups(lattice)) {
    if (!is_normal(m)) out.maximal_subgroups_normal = false;
  }
  out.hypercenter_is_whole = hypercenter(g).is_whole();
  return out;
}

bool is_subnormal_in(const Subgroup& k, const Subgroup& h) {
  if (!h.is_subgroup_of(k)) return false;
  Subgroup current = k;
  while (true) {
    Subgroup next = normal_closure_in(current, h);
    if (next.order() == h.order()) return true;
    if (next.order() == current.order()) return false;
    current = std::move(next);
  }
}

bool is_subnormal(const Subgroup& h) { return is_subnormal_in(whole_group(h.parent()), h); }

bool is_pronormal_in(const Subgroup& k, const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  const auto hs = generators(h);
  const auto norm = normalizer_in(k, h).members().to_vector();
  ElementSet done(g.order());
  bool ok = true;
  k.members().for_each([&](Index x) {
    if (!ok || done.contains(x)) return;
    for (Index n : norm) done.insert(g.mul(n, x));
    Subgroup hx = conjugate(h, x);
    Subgroup j = join(h, hx);
    bool found = false;
    j.members().for_each([&](Index u) {
      if (found) return;
      for (Index s : hs) {
        if (!hx.contains(g.conj(s, u))) return;
      }
      found = true;
    });
    if (!found) ok = false;
  });
  return ok;
}

bool is_pronormal(const Subgroup& h) { return is_pronormal_in(whole_group(h.parent()), h); }

bool is_abnormal(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  if (normalizer(h).order() != h.order()) return false;
  // with N_G(H) = H the condition only depends on the coset Hx
  const auto hm = h.members().to_vector();
  ElementSet done(g.order());
  for (Index x = 0; x < g.order(); ++x) {
    if (done.contains(x)) continue;
    for (Index m : hm) done.insert(g.mul(m, x));
    if (!join(h, conjugate(h, x)).contains(x)) return false;
  }
  return true;
}

bool is_quasinormal(const SubgroupLattice& lattice, const Subgroup& h) {
  for (const auto& k : lattice) {
    if (!permutes(h, k)) return false;
  }
  return true;
}

std::vector<Subgroup> all_sylow_subgroups(const FiniteGroup& g) {
  std::vector<Subgroup> out;
  for (std::size_t p : prime_divisors(g.order())) {
    for (auto& s : sylow_subgroups(g, p)) out.push_back(std::move(s));
  }
  return out;
}

bool is_s_permutable(const Subgroup& h, const std::vector<Subgroup>& all_sylows) {
  for (const auto& p : all_sylows) {
    if (!permutes(h, p)) return false;
  }
  return true;
}

bool is_s_permutable(const Subgroup& h) { return is_s_permutable(h, all_sylow_subgroups(h.parent())); }

bool is_conjugate_permutable(const Subgroup& h) {
  return kernels::permuting_conjugators(h).count() == h.parent().order();
}

bool is_r_conjugate_permutable(const Subgroup& h, const ElementSubset& r) {
  bool ok = true;
  r.members().for_each([&](Index x) {
    if (ok && !permutes(h, conjugate(h, x))) ok = false;
  });
  return ok;
}

std::vector<Factorization> dinilpotent_factorizations(const SubgroupLattice& lattice, std::size_t limit) {
  const FiniteGroup& g = lattice.group();
  std::vector<const Subgroup*> nilpotent;
  for (const auto& h : lattice) {
    if (subgroup_is_nilpotent(h)) nilpotent.push_back(&h);
  }
  const std::size_t pairs = nilpotent.size() * (nilpotent.size() + 1) / 2;
  if (pairs > limit) throw SearchCapExceeded(limit);

  std::vector<Factorization> out;
  for (std::size_t i = 0; i < nilpotent.size(); ++i) {
    for (std::size_t j = i; j < nilpotent.size(); ++j) {
      const Subgroup& a = *nilpotent[i];
      const Subgroup& b = *nilpotent[j];
      // |AB| = |A||B|/|A ∩ B|
      if (a.order() * b.order() != g.order() * (a.members() & b.members()).count()) continue;
      if (set_product(a, b).size() != g.order()) continue;
      out.push_back({a, b});
    }
  }
  return out;
}

}  // namespace cpg
