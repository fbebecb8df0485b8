#include "cpg/theoremlab.hpp"

#include <omp.h>

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <numeric>

#include "cpg/cycle_notation.hpp"
#include "cpg/errors.hpp"
#include "cpg/kernels.hpp"

namespace cpg::lab {

namespace {

struct Entry {
  StatementId id;
  std::string_view name;
  bool biconditional;
};

constexpr std::array kRegistry{
    Entry{StatementId::A, "A", true},          Entry{StatementId::A1, "A1", false},
    Entry{StatementId::A2, "A2", false},       Entry{StatementId::B, "B", true},
    Entry{StatementId::B1, "B1", true},        Entry{StatementId::B2, "B2", true},
    Entry{StatementId::C, "C", false},         Entry{StatementId::C1, "C1", false},
    Entry{StatementId::D, "D", true},          Entry{StatementId::D1, "D1", false},
    Entry{StatementId::E, "E", true},          Entry{StatementId::F, "F", true},
    Entry{StatementId::G, "G", true},          Entry{StatementId::L2_15, "L2.15", false},
    Entry{StatementId::L2_16, "L2.16", false}, Entry{StatementId::T2_2, "T2.2", false},
    Entry{StatementId::T2_5, "T2.5", false},   Entry{StatementId::T2_6, "T2.6", false},
    Entry{StatementId::L2_7, "L2.7", false},   Entry{StatementId::L2_10, "L2.10", false},
    Entry{StatementId::L2_11, "L2.11", false}, Entry{StatementId::T2_12, "T2.12", false},
    Entry{StatementId::T2_13, "T2.13", false}, Entry{StatementId::T2_14, "T2.14", false},
    Entry{StatementId::T2_19, "T2.19", true},  Entry{StatementId::D2_21, "D2.21", false},
    Entry{StatementId::T2_22, "T2.22", false}, Entry{StatementId::L2_17, "L2.17", false},
    Entry{StatementId::L3_1, "L3.1", false},   Entry{StatementId::L3_2, "L3.2", false},
    Entry{StatementId::L3_3, "L3.3", false},   Entry{StatementId::P3_4, "P3.4", false},
    Entry{StatementId::C3_4_1, "C3.4.1", false}, Entry{StatementId::C3_4_2, "C3.4.2", false},
    Entry{StatementId::L3_5, "L3.5", false},   Entry{StatementId::EX1, "EX1", false},
    Entry{StatementId::EX3, "EX3", false},
};

const Entry& entry(StatementId id) { return kRegistry[static_cast<std::size_t>(id)]; }

std::string bool_text(bool b) { return b ? "true" : "false"; }

void note(StatementReport& r, std::string label) { r.witnesses.push_back({std::move(label), {}}); }

void show(StatementReport& r, std::string label, const Subgroup& h) {
  r.witnesses.push_back(describe(std::move(label), h));
}

void fail(StatementReport& r, std::string label, const Subgroup& h) {
  r.verdict = Verdict::Violated;
  show(r, std::move(label), h);
}

void fail(StatementReport& r, std::string label) {
  r.verdict = Verdict::Violated;
  note(r, std::move(label));
}

void inapplicable(StatementReport& r, std::string reason) {
  r.verdict = Verdict::Inapplicable;
  note(r, "hypothesis:" + std::move(reason));
}

// Records a conclusion that must hold once the hypothesis does.
void conclude(StatementReport& r, std::string what, bool value) {
  note(r, "conclusion:" + what + "=" + bool_text(value));
  if (!value) r.verdict = Verdict::Violated;
}

// One condition of an equivalence, with the subgroups that decide it.
struct Side {
  std::string name;
  bool value = true;
  std::vector<Witness> evidence;

  void refute(std::string label, const Subgroup& h) {
    if (!value) return;
    value = false;
    evidence.push_back(describe(std::move(label), h));
  }
};

void equivalent(StatementReport& r, const std::vector<Side>& sides) {
  for (const auto& s : sides) {
    note(r, "side:" + s.name + "=" + bool_text(s.value));
    r.witnesses.insert(r.witnesses.end(), s.evidence.begin(), s.evidence.end());
  }
  auto direction = [&](const Side& a, const Side& b) {
    const char* state = !a.value ? "vacuous" : b.value ? "holds" : "fails";
    note(r, "direction:" + a.name + "=>" + b.name + "=" + state);
  };
  for (std::size_t i = 1; i < sides.size(); ++i) {
    direction(sides[0], sides[i]);
    direction(sides[i], sides[0]);
    if (sides[i].value != sides[0].value) r.verdict = Verdict::Violated;
  }
}

bool rcp(const GroupContext& c, const Subgroup& h, const ElementSet& r) {
  return r.is_subset_of(c.conjugators(h));
}

bool factorizes(const Subgroup& a, const Subgroup& b) {
  const std::size_t n = a.parent().order();
  if (a.order() * b.order() != n * intersection(a, b).order()) return false;
  return set_product(a, b).size() == n;
}

bool is_abelian(const Subgroup& h) {
  const auto gens = generators(h);
  for (Index a : gens) {
    for (Index b : gens) {
      if (h.parent().mul(a, b) != h.parent().mul(b, a)) return false;
    }
  }
  return true;
}

Side nilpotent_side(const GroupContext& c) {
  Side s{"nilpotent", c.nilpotent(), {}};
  if (!s.value) {
    for (const auto& p : c.sylows()) {
      if (!is_normal(p)) {
        s.evidence.push_back(describe("non-normal Sylow", p));
        break;
      }
    }
  }
  return s;
}

Side supersoluble_side(const GroupContext& c) {
  Side s{"supersoluble", c.supersoluble(), {}};
  if (!s.value) {
    const auto series = chief_series(c.group());
    for (std::size_t i = 0; i + 1 < series.terms.size(); ++i) {
      const auto& hi = series.terms[i + 1];
      const auto& lo = series.terms[i];
      if (prime_divisors(hi.order() / lo.order()).front() != hi.order() / lo.order()) {
        s.evidence.push_back(describe("chief factor top", hi));
        s.evidence.push_back(describe("chief factor bottom", lo));
        break;
      }
    }
  }
  return s;
}

std::vector<std::size_t> positions_where(const GroupContext& c, auto&& pred) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < c.lattice().size(); ++i) {
    if (pred(i)) out.push_back(i);
  }
  return out;
}

void check_pair_budget(const GroupContext& c, std::size_t n) {
  if (n * (n + 1) / 2 > c.caps().max_pairs) throw SearchCapExceeded(c.caps().max_pairs);
}

// First unordered pair (i <= j) of the candidate positions accepted by `ok`.
std::optional<std::pair<std::size_t, std::size_t>> find_pair(const GroupContext& c,
                                                             const std::vector<std::size_t>& cand,
                                                             auto&& ok) {
  check_pair_budget(c, cand.size());
  const auto& lat = c.lattice();
  for (std::size_t i = 0; i < cand.size(); ++i) {
    for (std::size_t j = i; j < cand.size(); ++j) {
      if (ok(lat[cand[i]], lat[cand[j]])) return std::pair{cand[i], cand[j]};
    }
  }
  return std::nullopt;
}

// Supersoluble subgroups that are F(G)-conjugate-permutable.
std::vector<std::size_t> supersoluble_fcp(const GroupContext& c) {
  const auto& f = c.profile().fitting.members();
  const auto& flags = c.flags();
  return positions_where(c, [&](std::size_t i) {
    return flags.supersoluble[i] && f.is_subset_of(c.conjugators()[i]);
  });
}

void show_pair(Side& s, const Subgroup& a, const Subgroup& b) {
  s.evidence.push_back(describe("A", a));
  s.evidence.push_back(describe("B", b));
}

// ---- Theorems A-G -------------------------------------------------------

void check_A(const GroupContext& c, StatementReport& r) {
  const auto& ft = c.profile().f_tilde.members();
  Side rhs{"maximal-ftilde-cp", true, {}};
  for (const auto& m : c.maximal()) {
    if (!rcp(c, m, ft)) rhs.refute("maximal subgroup not F~-C-P", m);
  }
  equivalent(r, {nilpotent_side(c), rhs});
}

void check_A1(const GroupContext& c, StatementReport& r) {
  for (const auto& m : c.maximal()) {
    if (c.conjugators(m).count() != c.group().order()) {
      show(r, "maximal subgroup not C-P", m);
      inapplicable(r, "some maximal subgroup is not conjugate-permutable");
      return;
    }
  }
  conclude(r, "nilpotent", c.nilpotent());
}

void check_A2(const GroupContext& c, StatementReport& r) {
  if (c.nilpotent()) return inapplicable(r, "group is nilpotent");
  const auto& ft = c.profile().f_tilde;
  const auto& flags = c.flags();
  for (const auto& m : c.maximal()) {
    if (flags.abnormal[c.lattice().position(m)] && !ft.is_subgroup_of(m)) {
      show(r, "abnormal maximal M with F~ not in M", m);
      return;
    }
  }
  fail(r, "no abnormal maximal subgroup avoids F~");
}

void check_B(const GroupContext& c, StatementReport& r) {
  const auto& fs = c.profile().f_star.members();
  const auto& lat = c.lattice();
  Side abnormal{"abnormal-fstar-cp", true, {}};
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (c.flags().abnormal[i] && !fs.is_subset_of(c.conjugators()[i])) {
      abnormal.refute("abnormal subgroup not F*-C-P", lat[i]);
    }
  }
  Side norms{"sylow-normalizer-fstar-cp", true, {}};
  Side sylows{"sylow-fstar-cp", true, {}};
  for (const auto& p : c.sylows()) {
    auto n = normalizer(p);
    if (!rcp(c, n, fs)) norms.refute("Sylow normalizer not F*-C-P", n);
    if (!rcp(c, p, fs)) sylows.refute("Sylow subgroup not F*-C-P", p);
  }
  equivalent(r, {nilpotent_side(c), abnormal, norms, sylows});
}

void check_B1(const GroupContext& c, StatementReport& r) {
  const auto& fs = c.profile().f_star;
  Side rhs{"fstar-in-sylow-normalizers", true, {}};
  for (const auto& p : c.sylows()) {
    if (!fs.is_subgroup_of(normalizer(p))) rhs.refute("Sylow whose normalizer misses F*", p);
  }
  equivalent(r, {nilpotent_side(c), rhs});
}

void check_B2(const GroupContext& c, StatementReport& r) {
  const auto& fs = c.profile().f_star.members();
  Side sylows{"maximal-sylow-fstar-cp", true, {}};
  Side norms{"maximal-sylow-normalizer-fstar-cp", true, {}};
  for (const auto& m : c.maximal()) {
    for (std::size_t p : prime_divisors(m.order())) {
      for (const auto& s : sylow_subgroups(m, p)) {
        if (!rcp(c, s, fs)) sylows.refute("Sylow of a maximal subgroup not F*-C-P", s);
        auto n = normalizer_in(m, s);
        if (!rcp(c, n, fs)) norms.refute("N_M(P) not F*-C-P", n);
      }
    }
  }
  equivalent(r, {nilpotent_side(c), sylows, norms});
}

// <g> for g != 1 of prime-power order, restricted to elements in `where`.
void check_cyclic_primary(const GroupContext& c, StatementReport& r, const ElementSet& where) {
  const FiniteGroup& g = c.group();
  const auto& fs = c.profile().f_star.members();
  bool ok = true;
  where.for_each([&](Index x) {
    if (!ok || x == FiniteGroup::identity() || !is_prime_power(g.element_order(x))) return;
    auto h = cyclic_subgroup(g, x);
    if (!rcp(c, h, fs)) {
      ok = false;
      show(r, "cyclic primary subgroup not F*-C-P", h);
    }
  });
  if (!ok) return inapplicable(r, "some cyclic primary subgroup is not F*-C-P");
  conclude(r, "nilpotent", c.nilpotent());
}

void check_C(const GroupContext& c, StatementReport& r) {
  check_cyclic_primary(c, r, ElementSet::full(c.group().order()));
}

void check_C1(const GroupContext& c, StatementReport& r) {
  // a p-element of M lies in some Sylow p-subgroup of M, so the cyclic
  // subgroups of Sylows of maximal subgroups are the <g>, g a p-element of some M
  ElementSet where(c.group().order());
  for (const auto& m : c.maximal()) where |= m.members();
  check_cyclic_primary(c, r, where);
}

void check_D(const GroupContext& c, StatementReport& r) {
  std::vector<Factorization> fs;
  try {
    fs = dinilpotent_factorizations(c.lattice(), c.caps().max_pairs);
  } catch (const SearchCapExceeded& e) {
    note(r, "cap:" + e.cap_name());
    return inapplicable(r, "dinilpotent factorization search exhausted");
  }
  if (fs.empty()) return inapplicable(r, "no dinilpotent factorization");
  show(r, "dinilpotent A", fs.front().a);
  show(r, "dinilpotent B", fs.front().b);
  const auto& f = c.profile().fitting.members();
  Side rhs{"fcp-dinilpotent-factorization", false, {}};
  for (const auto& [a, b] : fs) {
    if (rcp(c, a, f) && rcp(c, b, f)) {
      rhs.value = true;
      show_pair(rhs, a, b);
      break;
    }
  }
  equivalent(r, {nilpotent_side(c), rhs});
}

void check_D1(const GroupContext& c, StatementReport& r) {
  std::vector<Factorization> fs;
  try {
    fs = dinilpotent_factorizations(c.lattice(), c.caps().max_pairs);
  } catch (const SearchCapExceeded& e) {
    note(r, "cap:" + e.cap_name());
    return inapplicable(r, "dinilpotent factorization search exhausted");
  }
  const auto& f = c.profile().fitting;
  for (const auto& [a, b] : fs) {
    if (f.is_subgroup_of(intersection(a, b))) {
      show(r, "A", a);
      show(r, "B", b);
      return conclude(r, "nilpotent", c.nilpotent());
    }
  }
  inapplicable(r, "no dinilpotent factorization with F(G) in A and B");
}

void check_E(const GroupContext& c, StatementReport& r) {
  Side rhs{"ss-fcp-factorization-and-derived-nilpotent", false, {}};
  const bool derived_nil = subgroup_is_nilpotent(c.profile().derived);
  note(r, "derived-nilpotent=" + bool_text(derived_nil));
  if (auto p = find_pair(c, supersoluble_fcp(c), factorizes)) {
    rhs.value = derived_nil;
    show_pair(rhs, c.lattice()[p->first], c.lattice()[p->second]);
  }
  equivalent(r, {supersoluble_side(c), rhs});
}

void check_F(const GroupContext& c, StatementReport& r) {
  Side rhs{"metanilpotent-and-coprime-ss-fcp-pair", false, {}};
  const bool meta = c.metanilpotent();
  note(r, "metanilpotent=" + bool_text(meta));
  const std::size_t n = c.group().order();
  auto coprime = [n](const Subgroup& a, const Subgroup& b) {
    return std::gcd(n / a.order(), n / b.order()) == 1;
  };
  if (auto p = find_pair(c, supersoluble_fcp(c), coprime)) {
    rhs.value = meta;
    show_pair(rhs, c.lattice()[p->first], c.lattice()[p->second]);
  }
  equivalent(r, {supersoluble_side(c), rhs});
}

void check_G(const GroupContext& c, StatementReport& r) {
  Side rhs{"ss-fcp-factorization-with-derived-product", false, {}};
  const auto& derived = c.profile().derived.members();
  auto ok = [&](const Subgroup& a, const Subgroup& b) {
    if (!factorizes(a, b)) return false;
    return set_product(derived_subgroup(a), derived_subgroup(b)).members() == derived;
  };
  if (auto p = find_pair(c, supersoluble_fcp(c), ok)) {
    rhs.value = true;
    show_pair(rhs, c.lattice()[p->first], c.lattice()[p->second]);
  }
  equivalent(r, {supersoluble_side(c), rhs});
}

// ---- Section 2 ----------------------------------------------------------

void check_L2_15(const GroupContext& c, StatementReport& r) {
  const auto& p = c.profile();
  if (!p.f_star.is_subgroup_of(p.f_tilde)) {
    show(r, "F~", p.f_tilde);
    fail(r, "F* not inside F~", p.f_star);
  }
}

void check_L2_16(const GroupContext& c, StatementReport& r) {
  const auto& p = c.profile();
  auto e = quotient(p.frattini);
  const auto lhs = f_tilde(frattini(e.codomain()));
  conclude(r, "ftilde-of-quotient", lhs == image(e, p.f_tilde));
  conclude(r, "centralizer-ftilde-in-fitting", centralizer(p.f_tilde).is_subgroup_of(p.fitting));
  if (is_soluble(c.group())) {
    conclude(r, "centralizer-fitting-in-fitting", centralizer(p.fitting).is_subgroup_of(p.fitting));
  }
  conclude(r, "centralizer-fstar-in-fitting", centralizer(p.f_star).is_subgroup_of(p.fitting));
  conclude(r, "tower", p.fitting.is_subgroup_of(p.f_star) && p.f_star.is_subgroup_of(p.f_tilde));
}

void check_T2_2(const GroupContext& c, StatementReport& r) {
  const auto n = nilpotency_characterizations(c.lattice());
  note(r, "sylows-normal=" + bool_text(n.sylows_normal));
  note(r, "direct-product-of-sylows=" + bool_text(n.direct_product_of_sylows));
  note(r, "normalizers-grow=" + bool_text(n.normalizers_grow));
  note(r, "maximal-subgroups-normal=" + bool_text(n.maximal_subgroups_normal));
  note(r, "all-subgroups-subnormal=" + bool_text(n.all_subgroups_subnormal));
  note(r, "hypercenter-is-whole=" + bool_text(n.hypercenter_is_whole));
  if (!n.agree()) fail(r, "characterizations disagree");
}

void check_T2_5(const GroupContext& c, StatementReport& r) {
  const auto& phi = c.profile().frattini;
  show(r, "Frattini", phi);
  conclude(r, "normal", is_normal(phi));
  conclude(r, "nilpotent", subgroup_is_nilpotent(phi));
}

void check_T2_6(const GroupContext& c, StatementReport& r) {
  const auto& phi = c.profile().frattini;
  for (const auto& d : c.normals()) {
    if (!d.is_subgroup_of(phi)) continue;
    for (const auto& k : c.normals()) {
      if (!d.is_subgroup_of(k)) continue;
      auto emb = as_group(k);
      auto e = quotient(emb.restrict(d));
      if (is_nilpotent(e.codomain()) && !subgroup_is_nilpotent(k)) {
        show(r, "D", d);
        return fail(r, "K with K/D nilpotent but K not nilpotent", k);
      }
    }
  }
}

void check_L2_7(const GroupContext& c, StatementReport& r) {
  const std::size_t n = c.group().order();
  for (const auto& k : c.normals()) {
    for (std::size_t p : prime_divisors(k.order())) {
      for (const auto& s : sylow_subgroups(k, p)) {
        if (set_product(normalizer(s), k).size() != n) {
          show(r, "K", k);
          return fail(r, "Sylow P of K with N_G(P)K != G", s);
        }
      }
    }
  }
}

void check_L2_10(const GroupContext& c, StatementReport& r) {
  const auto& lat = c.lattice();
  for (const auto& cls : c.classes()) {
    const auto& h = lat[cls.representative];
    if (!c.flags().pronormal[cls.representative]) continue;
    if (!is_abnormal(normalizer(h))) return fail(r, "pronormal H with N_G(H) not abnormal", h);
  }
}

void check_L2_11(const GroupContext& c, StatementReport& r) {
  const auto& lat = c.lattice();
  const FiniteGroup& g = c.group();
  std::size_t pairs = 0;
  for (const auto& cls : c.classes()) {
    if (!c.flags().abnormal[cls.representative]) continue;
    const auto& h = lat[cls.representative];
    const auto hs = generators(h);
    for (const auto& u : lat) {
      if (!h.is_subgroup_of(u)) continue;
      if (++pairs > c.caps().max_pairs) throw SearchCapExceeded(c.caps().max_pairs);
      for (Index x = 0; x < g.order(); ++x) {
        if (u.contains(x)) continue;
        // H <= U^x  iff  x h x^-1 in U for each generator h
        const bool inside = std::all_of(hs.begin(), hs.end(),
                                        [&](Index s) { return u.contains(g.conj(s, g.inv(x))); });
        if (inside) {
          show(r, "H", h);
          show(r, "U", u);
          return fail(r, "x outside U with H in U^x: " + to_cycles(g.element(x)));
        }
      }
    }
  }
}

void check_T2_12(const GroupContext& c, StatementReport& r) {
  const auto& p = c.profile();
  if (!p.frattini.is_trivial()) return inapplicable(r, "Frattini subgroup is not trivial");
  if (!(p.hypercenter == p.center)) {
    show(r, "center", p.center);
    fail(r, "hypercenter", p.hypercenter);
  }
}

void check_T2_13(const GroupContext& c, StatementReport& r) {
  ElementSet meet = ElementSet::full(c.group().order());
  for (const auto& p : c.sylows()) meet &= normalizer(p).members();
  const Subgroup inter(c.group(), meet);
  if (!(inter == c.profile().hypercenter)) {
    show(r, "hypercenter", c.profile().hypercenter);
    fail(r, "intersection of Sylow normalizers", inter);
  }
}

void check_T2_14(const GroupContext& c, StatementReport& r) {
  const auto& p = c.profile();
  auto e = quotient(p.frattini);
  const FiniteGroup& q = e.codomain();
  const auto fq = fitting(q);
  conclude(r, "fitting-of-quotient", fq == image(e, p.fitting));
  if (q.order() > 1) {
    Subgroup acc = trivial_subgroup(q);
    for (const auto& m : minimal_normal_subgroups(q)) {
      if (is_abelian(m)) acc = join(acc, m);
    }
    conclude(r, "abelian-minimal-normal-join", acc == fq);
  }
}

void check_T2_19(const GroupContext& c, StatementReport& r) {
  auto e = quotient(c.profile().hypercenter);
  Side lhs{"quasinilpotent", is_quasinilpotent(c.group()), {}};
  Side rhs{"quotient-by-hypercenter-quasinilpotent", is_quasinilpotent(e.codomain()), {}};
  equivalent(r, {lhs, rhs});
}

void check_D2_21(const GroupContext& c, StatementReport& r) {
  if (!c.supersoluble()) return inapplicable(r, "group is not supersoluble");
  show(r, "derived subgroup", c.profile().derived);
  conclude(r, "derived-nilpotent", subgroup_is_nilpotent(c.profile().derived));
}

// Pairs (A, B) of lattice positions passing `qualifies`; the conclusion is
// that G is supersoluble.
void check_supersoluble_products(const GroupContext& c, StatementReport& r,
                                 const std::vector<std::size_t>& left,
                                 const std::vector<std::size_t>& right, auto&& qualifies,
                                 const std::string& what) {
  if (left.size() * right.size() > c.caps().max_pairs) {
    note(r, "cap:max-pairs");
    return inapplicable(r, "pair search exhausted");
  }
  const auto& lat = c.lattice();
  for (std::size_t i : left) {
    for (std::size_t j : right) {
      if (!qualifies(lat[i], lat[j])) continue;
      show(r, "A", lat[i]);
      show(r, "B", lat[j]);
      return conclude(r, "supersoluble", c.supersoluble());
    }
  }
  inapplicable(r, "no " + what);
}

void check_T2_22(const GroupContext& c, StatementReport& r) {
  const auto& f = c.flags();
  auto cand = positions_where(c, [&](std::size_t i) { return f.subnormal[i] && f.supersoluble[i]; });
  const std::size_t n = c.group().order();
  check_supersoluble_products(
      c, r, cand, cand,
      [n](const Subgroup& a, const Subgroup& b) {
        return std::gcd(n / a.order(), n / b.order()) == 1 && factorizes(a, b);
      },
      "pair of subnormal supersoluble subgroups with coprime indices");
}

void check_L2_17(const GroupContext& c, StatementReport& r) {
  const auto& f = c.flags();
  auto left = positions_where(c, [&](std::size_t i) { return f.normal[i] && f.nilpotent[i]; });
  auto right = positions_where(c, [&](std::size_t i) { return f.subnormal[i] && f.supersoluble[i]; });
  check_supersoluble_products(c, r, left, right, factorizes,
                              "product of a normal nilpotent and a subnormal supersoluble subgroup");
}

// ---- Section 3 ----------------------------------------------------------

void check_L3_1(const GroupContext& c, StatementReport& r) {
  const auto& f = c.flags();
  for (std::size_t i = 0; i < c.lattice().size(); ++i) {
    if (f.conj_perm[i] && !f.subnormal[i]) return fail(r, "C-P subgroup not subnormal", c.lattice()[i]);
  }
}

void check_L3_3(const GroupContext& c, StatementReport& r) {
  const auto& f = c.flags();
  for (std::size_t i = 0; i < c.lattice().size(); ++i) {
    if (f.conj_perm[i] && f.pronormal[i] && !f.normal[i]) {
      return fail(r, "pronormal C-P subgroup not normal", c.lattice()[i]);
    }
  }
}

// For each H in `hs` (one per conjugacy class is enough: the hypotheses are
// invariant under simultaneous conjugation of H and R) and each subgroup R
// with H R-C-P and HR = RH, calls body(H, R, HR); body returns false to stop.
void for_each_rcp_pair(const GroupContext& c, const std::vector<std::size_t>& hs, auto&& body) {
  const auto& lat = c.lattice();
  if (hs.size() * lat.size() > c.caps().max_pairs) throw SearchCapExceeded(c.caps().max_pairs);
  for (std::size_t i : hs) {
    const auto& h = lat[i];
    const auto& x = c.conjugators()[i];
    for (const auto& rr : lat) {
      if (!rr.members().is_subset_of(x) || !permutes(h, rr)) continue;
      if (!body(h, rr, join(h, rr))) return;
    }
  }
}

std::vector<std::size_t> class_representatives(const GroupContext& c) {
  std::vector<std::size_t> out;
  for (const auto& cls : c.classes()) out.push_back(cls.representative);
  return out;
}

void check_L3_2(const GroupContext& c, StatementReport& r) {
  std::size_t seen = 0;
  for_each_rcp_pair(c, class_representatives(c), [&](const Subgroup& h, const Subgroup& rr,
                                                     const Subgroup& hr) {
    ++seen;
    if (is_subnormal_in(hr, h)) return true;
    show(r, "R", rr);
    fail(r, "H not subnormal in HR", h);
    return false;
  });
  note(r, "pairs=" + std::to_string(seen));
}

void check_P3_4(const GroupContext& c, StatementReport& r) {
  std::size_t pronormal_cases = 0;
  for_each_rcp_pair(c, class_representatives(c), [&](const Subgroup& h, const Subgroup& rr,
                                                     const Subgroup& hr) {
    if (!is_subnormal_in(hr, h)) {
      show(r, "R", rr);
      fail(r, "H not subnormal in HR", h);
      return false;
    }
    if (!is_pronormal_in(hr, h)) return true;
    ++pronormal_cases;
    if (is_normal_in(h, hr)) return true;
    show(r, "R", rr);
    fail(r, "H pronormal in HR but not normal", h);
    return false;
  });
  note(r, "pronormal-cases=" + std::to_string(pronormal_cases));
}

void check_C3_4_1(const GroupContext& c, StatementReport& r) {
  // Sylow p-subgroups form one conjugacy class per prime
  std::vector<std::size_t> ps;
  for (std::size_t p : prime_divisors(c.group().order())) {
    ps.push_back(c.lattice().position(sylow_subgroup(whole_group(c.group()), p)));
  }
  for_each_rcp_pair(c, ps, [&](const Subgroup& p, const Subgroup& rr, const Subgroup& pr) {
    if (is_normal_in(p, pr)) return true;
    show(r, "R", rr);
    fail(r, "Sylow P not normal in PR", p);
    return false;
  });
}

void check_C3_4_2(const GroupContext& c, StatementReport& r) {
  const auto& lat = c.lattice();
  auto maximal_in = [&](const Subgroup& m, const Subgroup& j) {
    if (m.order() == j.order()) return false;
    for (const auto& k : lat) {
      if (k.order() > m.order() && k.order() < j.order() && m.is_subgroup_of(k) &&
          k.is_subgroup_of(j)) {
        return false;
      }
    }
    return true;
  };
  std::size_t seen = 0;
  for_each_rcp_pair(c, class_representatives(c), [&](const Subgroup& m, const Subgroup& rr,
                                                     const Subgroup& mr) {
    if (!maximal_in(m, mr)) return true;
    ++seen;
    if (is_normal_in(m, mr)) return true;
    show(r, "R", rr);
    fail(r, "M maximal in MR but not normal in MR", m);
    return false;
  });
  note(r, "maximal-cases=" + std::to_string(seen));
}

void check_L3_5(const GroupContext& c, StatementReport& r) {
  const auto& lat = c.lattice();
  const std::size_t n = c.group().order();
  for (const auto& cls : c.classes()) {
    if (!c.flags().conj_perm[cls.representative]) continue;
    const auto& h = lat[cls.representative];
    for (const auto& k : c.normals()) {
      auto hk = join(h, k);
      if (c.conjugators(hk).count() != n) {
        show(r, "K", k);
        return fail(r, "C-P H with HK not C-P", h);
      }
    }
  }
}

// ---- Examples -----------------------------------------------------------

void fact(StatementReport& r, const std::string& what, bool value) {
  note(r, "fact:" + what + "=" + bool_text(value));
  if (!value) r.verdict = Verdict::Violated;
}

void check_EX1(const GroupContext& c, StatementReport& r) {
  const FiniteGroup& g = c.group();
  if (g.degree() != 4 || g.order() != 24) return inapplicable(r, "not the symmetric group of degree 4");
  const auto& p = c.profile();
  auto h = sylow_subgroup(whole_group(g), 2);
  show(r, "H", h);
  show(r, "F", p.fitting);
  const auto& maxes = c.maximal();
  fact(r, "H-maximal", std::find(maxes.begin(), maxes.end(), h) != maxes.end());
  fact(r, "H-not-normal", !is_normal(h));
  fact(r, "ftilde=fstar=fitting-in-H",
       p.f_tilde == p.f_star && p.f_star == p.fitting && p.fitting.is_subgroup_of(h));
  fact(r, "H-fitting-cp", rcp(c, h, p.fitting.members()));
  fact(r, "H-not-cp", c.conjugators(h).count() != g.order());
}

void check_EX3(const GroupContext& c, StatementReport& r) {
  const FiniteGroup& g = c.group();
  if (g.order() != 294) return inapplicable(r, "order is not 294");
  auto whole = whole_group(g);
  auto v = sylow_subgroup(whole, 7);
  if (!is_normal(v)) return inapplicable(r, "no normal subgroup of order 49");
  auto e = quotient(v);
  if (derived_subgroup(e.codomain()).is_trivial()) return inapplicable(r, "quotient of order 6 is abelian");

  const auto& p = c.profile();
  auto a = join(p.fitting, sylow_subgroup(whole, 3));
  auto b = join(p.fitting, sylow_subgroup(whole, 2));
  show(r, "F", p.fitting);
  show(r, "A", a);
  show(r, "B", b);
  const auto& f = p.fitting.members();
  fact(r, "fitting-order-49", p.fitting == v);
  fact(r, "A-order-147", a.order() == 147);
  fact(r, "B-order-98", b.order() == 98);
  fact(r, "A-B-supersoluble", subgroup_is_supersoluble(a) && subgroup_is_supersoluble(b));
  fact(r, "A-B-fitting-cp", rcp(c, a, f) && rcp(c, b, f));
  fact(r, "G=AB", set_product(a, b).size() == g.order());
  fact(r, "G-not-supersoluble", !c.supersoluble());
  fact(r, "G-not-metanilpotent", !c.metanilpotent());
}

using Checker = void (*)(const GroupContext&, StatementReport&);

constexpr std::array<Checker, kRegistry.size()> kCheckers{
    check_A,     check_A1,    check_A2,    check_B,    check_B1,    check_B2,   check_C,
    check_C1,    check_D,     check_D1,    check_E,    check_F,     check_G,    check_L2_15,
    check_L2_16, check_T2_2,  check_T2_5,  check_T2_6, check_L2_7,  check_L2_10, check_L2_11,
    check_T2_12, check_T2_13, check_T2_14, check_T2_19, check_D2_21, check_T2_22, check_L2_17,
    check_L3_1,  check_L3_2,  check_L3_3,  check_P3_4, check_C3_4_1, check_C3_4_2, check_L3_5,
    check_EX1,   check_EX3,
};

}  // namespace

const std::vector<StatementId>& all_statements() {
  static const std::vector<StatementId> ids = [] {
    std::vector<StatementId> out;
    for (const auto& e : kRegistry) out.push_back(e.id);
    return out;
  }();
  return ids;
}

std::string_view name(StatementId id) { return entry(id).name; }

std::optional<StatementId> parse_statement(std::string_view text) {
  for (const auto& e : kRegistry) {
    if (e.name.size() != text.size()) continue;
    if (std::equal(e.name.begin(), e.name.end(), text.begin(),
                   [](char a, char b) { return std::toupper(a) == std::toupper(b); })) {
      return e.id;
    }
  }
  return std::nullopt;
}

bool is_biconditional(StatementId id) { return entry(id).biconditional; }

std::string_view name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Inapplicable: return "inapplicable";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

std::optional<bool> StatementReport::side(std::string_view side_name) const {
  const std::string key = "side:" + std::string(side_name) + "=";
  for (const auto& w : witnesses) {
    if (w.label.starts_with(key)) return w.label.substr(key.size()) == "true";
  }
  return std::nullopt;
}

Witness describe(std::string label, const Subgroup& h) {
  Witness w{std::move(label), {}};
  for (Index x : generators(h)) w.generators.push_back(to_cycles(h.parent().element(x)));
  if (w.generators.empty()) w.generators.push_back("()");
  return w;
}

GroupContext::GroupContext(std::string label, std::string expr, Caps caps)
    : label_(std::move(label)), expr_(std::move(expr)), caps_(caps) {}

GroupContext::GroupContext(std::string label, GroupPtr group, Caps caps)
    : label_(std::move(label)), caps_(caps) {
  group_.get([&] { return std::move(group); });
}

const FiniteGroup& GroupContext::group() const {
  return *group_.get([&] { return build(expr_, caps_.max_order); });
}

const SubgroupLattice& GroupContext::lattice() const {
  return lattice_.get([&] { return all_subgroups(group(), caps_.max_subgroups); });
}

const CharacteristicProfile& GroupContext::profile() const {
  return profile_.get([&] { return characteristic_profile(lattice()); });
}

const std::vector<Subgroup>& GroupContext::maximal() const {
  return maximal_.get([&] { return maximal_subgroups(lattice()); });
}

const std::vector<Subgroup>& GroupContext::normals() const {
  return normals_.get([&] { return normal_subgroups(lattice()); });
}

const std::vector<Subgroup>& GroupContext::sylows() const {
  return sylows_.get([&] { return all_sylow_subgroups(group()); });
}

const std::vector<SubgroupClass>& GroupContext::classes() const {
  return classes_.get([&] { return conjugacy_classes(lattice()); });
}

const std::vector<ElementSet>& GroupContext::conjugators() const {
  return conjugators_.get([&] {
    const auto& subs = lattice().subgroups();
    return kernels::permuting_conjugators(std::span<const Subgroup>(subs), kernels::Exec::Parallel);
  });
}

const ElementSet& GroupContext::conjugators(const Subgroup& h) const {
  return conjugators()[lattice().position(h)];
}

const EmbeddingFlags& GroupContext::flags() const {
  return flags_.get([&] {
    const auto& lat = lattice();
    const auto& cls = classes();
    const auto& xs = conjugators();
    const std::size_t n = lat.size();
    EmbeddingFlags f;
    for (auto* v : {&f.normal, &f.subnormal, &f.pronormal, &f.abnormal, &f.nilpotent,
                    &f.supersoluble, &f.conj_perm}) {
      v->assign(n, 0);
    }
    // every flag is invariant under conjugation, so one representative per class
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t ci = 0; ci < cls.size(); ++ci) {
      const auto& h = lat[cls[ci].representative];
      const char normal = is_normal(h);
      const char subnormal = normal || is_subnormal(h);
      const char pronormal = normal || is_pronormal(h);
      const char abnormal = is_abnormal(h);
      const char nilpotent = subgroup_is_nilpotent(h);
      const char supersoluble = nilpotent || subgroup_is_supersoluble(h);
      for (std::size_t i : cls[ci].members) {
        f.normal[i] = normal;
        f.subnormal[i] = subnormal;
        f.pronormal[i] = pronormal;
        f.abnormal[i] = abnormal;
        f.nilpotent[i] = nilpotent;
        f.supersoluble[i] = supersoluble;
        f.conj_perm[i] = xs[i].count() == group().order();
      }
    }
    return f;
  });
}

bool GroupContext::nilpotent() const {
  return nilpotent_.get([&] { return is_nilpotent(group()); });
}

bool GroupContext::supersoluble() const {
  return supersoluble_.get([&] { return is_supersoluble(group()); });
}

bool GroupContext::metanilpotent() const {
  return metanilpotent_.get([&] { return is_metanilpotent(group()); });
}

StatementReport evaluate_statement(StatementId id, const GroupContext& ctx) {
  StatementReport r;
  r.statement = id;
  r.group = ctx.label();
  r.verdict = Verdict::Holds;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    kCheckers[static_cast<std::size_t>(id)](ctx, r);
  } catch (const CapExceeded& e) {
    r.verdict = Verdict::Skipped;
    r.witnesses.clear();
    note(r, "cap:" + e.cap_name());
  } catch (const std::exception& e) {
    r.verdict = Verdict::Skipped;
    r.witnesses.clear();
    note(r, std::string("error:") + e.what());
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::size_t SuiteResult::count(Verdict v) const {
  return static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [v](const auto& r) { return r.verdict == v; }));
}

SuiteResult run_suite(const std::vector<CatalogEntry>& catalog, const std::vector<StatementId>& ids,
                      const Caps& caps, int jobs) {
  std::vector<std::unique_ptr<GroupContext>> contexts;
  for (const auto& e : catalog) contexts.push_back(std::make_unique<GroupContext>(e.label, e.expr, caps));
  SuiteResult out;
  const std::size_t cells = contexts.size() * ids.size();
  out.reports.resize(cells);
  const int team = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
  for (std::size_t cell = 0; cell < cells; ++cell) {
    out.reports[cell] = evaluate_statement(ids[cell % ids.size()], *contexts[cell / ids.size()]);
  }
  return out;
}

}  // namespace cpg::lab
