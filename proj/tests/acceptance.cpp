// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cpg/charsub.hpp"
#include "cpg/errors.hpp"
#include "cpg/expr.hpp"
#include "cpg/lattice.hpp"
#include "cpg/oracle.hpp"
#include "cpg/predicates.hpp"
#include "cpg/theoremlab.hpp"
#include "support.hpp"

using namespace cpg;
using lab::StatementId;
using lab::Verdict;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail << what;
    else detail << "; " << what;
    pass = false;
  }
};

struct Loaded {
  std::string label;
  GroupPtr group;
  std::optional<SubgroupLattice> lattice;
};

const std::vector<Loaded>& catalog() {
  static const std::vector<Loaded> groups = [] {
    std::vector<Loaded> out;
    for (const auto& e : default_catalog()) {
      Loaded l{e.label, build(e.expr), std::nullopt};
      try {
        l.lattice.emplace(all_subgroups(*l.group));
      } catch (const CapExceeded&) {
      }
      out.push_back(std::move(l));
    }
    return out;
  }();
  return groups;
}

// Every subgroup is reached from 1 by adjoining one element at a time.
std::set<support::PermSet> brute_subgroups(const FiniteGroup& g) {
  std::vector<Permutation> all;
  for (Index i = 0; i < g.order(); ++i) all.push_back(g.element(i));
  std::set<support::PermSet> seen{{Permutation::identity(g.degree())}};
  std::vector<support::PermSet> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    auto h = todo.back();
    todo.pop_back();
    for (const auto& x : all) {
      if (h.count(x)) continue;
      std::vector<Permutation> gens(h.begin(), h.end());
      gens.push_back(x);
      auto k = support::closure(g.degree(), gens);
      if (seen.insert(k).second) todo.push_back(std::move(k));
    }
  }
  return seen;
}

const lab::Witness* witness(const lab::StatementReport& r, const std::string& label) {
  for (const auto& w : r.witnesses) {
    if (w.label == label) return &w;
  }
  return nullptr;
}

void ex1(Outcome& o) {
  lab::GroupContext ctx("S4", "S4", {});
  auto r = lab::evaluate_statement(StatementId::EX1, ctx);
  o.expect(r.verdict == Verdict::Holds, "EX1 verdict " + std::string(lab::name(r.verdict)));
  int facts = 0;
  for (const auto& w : r.witnesses) {
    if (w.label.rfind("fact:", 0) == 0) {
      ++facts;
      o.expect(w.label.size() > 5 && w.label.substr(w.label.size() - 5) == "=true", w.label);
    }
  }
  o.expect(facts == 5, "expected 5 facts, got " + std::to_string(facts));

  const auto& g = ctx.group();
  auto h = sylow_subgroup(whole_group(g), 2);
  o.expect(h.order() == 8, "|H| != 8");
  o.expect(is_r_conjugate_permutable(h, ElementSubset(fitting(g))), "H not F(G)-C-P");
  o.expect(!is_conjugate_permutable(h), "H is C-P");
  // independent: some conjugate of H fails to permute with H
  auto hs = support::elements(h);
  bool bad = false;
  for (Index x = 0; x < g.order() && !bad; ++x) {
    bad = !support::permutes(hs, support::conjugate(hs, g.element(x)));
  }
  o.expect(bad, "brute force finds no non-permuting conjugate");
  if (o.pass) o.detail << "S4: 5/5 facts, H Sylow-2 F(G)-C-P and not C-P";
}

void ex3(Outcome& o) {
  lab::GroupContext ctx("Ex3", "Ex3", {});
  const auto& g = ctx.group();
  o.expect(g.order() == 294, "|G| = " + std::to_string(g.order()));
  auto f = fitting(g);
  o.expect(f.order() == 49, "|F| = " + std::to_string(f.order()));
  auto whole = whole_group(g);
  auto a = join(f, sylow_subgroup(whole, 3));
  auto b = join(f, sylow_subgroup(whole, 2));
  o.expect(a.order() == 147 && b.order() == 98, "factor orders");
  o.expect(subgroup_is_supersoluble(a) && subgroup_is_supersoluble(b), "factors not supersoluble");
  o.expect(is_r_conjugate_permutable(a, ElementSubset(f)) && is_r_conjugate_permutable(b, ElementSubset(f)),
           "factors not F(G)-C-P");
  o.expect(support::product(support::elements(a), support::elements(b)).size() == 294, "G != AB");
  o.expect(!is_supersoluble(g), "G supersoluble");
  auto r = lab::evaluate_statement(StatementId::EX3, ctx);
  o.expect(r.verdict == Verdict::Holds, "EX3 verdict " + std::string(lab::name(r.verdict)));
  if (o.pass) o.detail << "|G|=294 |F|=49 |A|=147 |B|=98 G=AB, G not supersoluble";
}

void tower(Outcome& o) {
  int soluble = 0;
  for (const auto& l : catalog()) {
    if (!l.lattice) {
      o.expect(false, l.label + ": lattice cap");
      continue;
    }
    auto p = characteristic_profile(*l.lattice);
    o.expect(p.fitting.is_subgroup_of(p.f_star) && p.f_star.is_subgroup_of(p.f_tilde), l.label + ": tower");
    if (is_soluble(*l.group)) {
      ++soluble;
      o.expect(p.fitting == p.f_star && p.f_star == p.f_tilde, l.label + ": soluble but tower not flat");
    }
  }
  if (o.pass) o.detail << catalog().size() << " groups, " << soluble << " soluble with F=F*=F~";
}

void theorems(Outcome& o) {
  const std::vector<StatementId> ids{StatementId::A,  StatementId::B, StatementId::B1, StatementId::B2,
                                     StatementId::C,  StatementId::C1, StatementId::D, StatementId::D1,
                                     StatementId::E,  StatementId::F, StatementId::G};
  auto suite = lab::run_suite(default_catalog(), ids);
  std::map<StatementId, std::set<bool>> seen;
  for (const auto& r : suite.reports) {
    if (r.verdict == Verdict::Violated) o.expect(false, std::string(lab::name(r.statement)) + " violated on " + r.group);
    if (r.verdict == Verdict::Skipped) o.expect(false, std::string(lab::name(r.statement)) + " skipped on " + r.group);
    if (r.verdict != Verdict::Holds) continue;
    for (const auto& w : r.witnesses) {
      if (w.label.rfind("side:", 0) == 0) {
        seen[r.statement].insert(w.label.substr(w.label.size() - 4) == "true");
        break;
      }
    }
  }
  int bic = 0;
  for (auto id : ids) {
    if (!lab::is_biconditional(id)) continue;
    ++bic;
    o.expect(seen[id].size() == 2, std::string(lab::name(id)) + ": one side never exercised");
  }
  if (o.pass) {
    o.detail << suite.reports.size() << " reports, 0 violated, " << suite.count(Verdict::Holds) << " holds, "
             << suite.count(Verdict::Inapplicable) << " inapplicable; " << bic << " biconditionals covered";
  }
}

void hypercenter_identity(Outcome& o) {
  for (const auto& l : catalog()) {
    auto z = hypercenter(*l.group);
    ElementSet meet = ElementSet::full(l.group->order());
    for (const auto& p : all_sylow_subgroups(*l.group)) meet &= normalizer(p).members();
    o.expect(z.members() == meet, l.label);
  }
  if (o.pass) o.detail << catalog().size() << " groups";
}

void implication_chain(Outcome& o) {
  std::size_t checked = 0, skipped = 0;
  for (const auto& l : catalog()) {
    if (!l.lattice) {
      ++skipped;
      continue;
    }
    const auto& lat = *l.lattice;
    auto normals = normal_subgroups(lat);
    auto sylows = all_sylow_subgroups(*l.group);
    for (const auto& h : lat) {
      ++checked;
      const bool n = is_normal(h);
      const bool q = is_quasinormal(lat, h);
      const bool s = is_s_permutable(h, sylows);
      const bool cp = is_conjugate_permutable(h);
      const std::string where = l.label + " |H|=" + std::to_string(h.order());
      o.expect(!n || q, where + ": normal not quasinormal");
      o.expect(!q || (s && cp), where + ": quasinormal not S-permutable/C-P");
      o.expect(!cp || is_subnormal(h), where + ": C-P not subnormal");
      o.expect(!(cp && is_pronormal(h)) || n, where + ": C-P pronormal not normal");
      if (!cp) continue;
      for (const auto& k : normals) {
        o.expect(is_conjugate_permutable(join(h, k)), where + ": HK not C-P");
      }
    }
  }
  o.expect(skipped == 0, std::to_string(skipped) + " groups over the subgroup cap");
  if (o.pass) o.detail << checked << " subgroups over " << catalog().size() << " groups";
}

void oracle_equivalence(Outcome& o) {
  int compared = 0;
  for (const auto& l : catalog()) {
    if (l.group->order() > oracle::kPowersetLimit) continue;
    auto expected = oracle::powerset_subgroups(*l.group);
    std::vector<std::vector<Index>> got;
    for (const auto& h : *l.lattice) got.push_back(h.members().to_vector());
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    o.expect(expected == got, l.label + ": powerset and lattice differ");
    ++compared;
  }
  const std::vector<std::pair<const char*, std::size_t>> counts{
      {"S3", 6}, {"S4", 30}, {"A4", 10}, {"D4", 10}, {"Q8", 6}};
  for (const auto& [expr, n] : counts) {
    auto g = build(expr);
    auto brute = brute_subgroups(*g);
    auto lat = all_subgroups(*g);
    std::set<support::PermSet> mine;
    for (const auto& h : lat) mine.insert(support::elements(h));
    o.expect(brute.size() == n, std::string(expr) + ": brute force count " + std::to_string(brute.size()));
    o.expect(mine == brute, std::string(expr) + ": lattice differs from brute force");
  }
  if (o.pass) o.detail << compared << " groups of order <= 16; S3 6, S4 30, A4 10, D8 10, Q8 6";
}

void quotient_compat(Outcome& o) {
  for (const auto& l : catalog()) {
    if (!l.lattice) {
      o.expect(false, l.label + ": lattice cap");
      continue;
    }
    auto phi = frattini(*l.lattice);
    auto e = quotient(phi);
    auto qlat = all_subgroups(e.codomain());
    o.expect(fitting(e.codomain()) == image(e, fitting(*l.group)), l.label + ": F");
    o.expect(f_tilde(qlat) == image(e, f_tilde(*l.lattice)), l.label + ": F~");
    o.expect(e.codomain().order() * phi.order() == l.group->order(), l.label + ": |G/Phi|");
  }
  if (o.pass) o.detail << catalog().size() << " groups";
}

void negative_control(Outcome& o) {
  auto a4 = build("A4");
  o.expect(is_metanilpotent(*a4) && !is_supersoluble(*a4), "A4");
  bool found = false;
  for (const auto& l : catalog()) {
    if (is_metanilpotent(*l.group) && !is_supersoluble(*l.group)) found = true;
  }
  o.expect(found, "no metanilpotent non-supersoluble catalog group");

  lab::GroupContext ctx("Ex3", "Ex3", {});
  const auto& g = ctx.group();
  auto f = fitting(g);
  auto whole = whole_group(g);
  auto a = join(f, sylow_subgroup(whole, 3));
  auto b = join(f, sylow_subgroup(whole, 2));
  const std::size_t ia = g.order() / a.order(), ib = g.order() / b.order();
  o.expect(std::gcd(ia, ib) == 1, "indices not coprime");
  o.expect(subgroup_is_supersoluble(a) && subgroup_is_supersoluble(b), "factors");
  o.expect(is_r_conjugate_permutable(a, ElementSubset(f)) && is_r_conjugate_permutable(b, ElementSubset(f)),
           "factors not F(G)-C-P");
  o.expect(set_product(a, b).size() == g.order(), "G != AB");
  o.expect(!is_metanilpotent(g) && !is_supersoluble(g), "Ex3 metanilpotent or supersoluble");
  auto r = lab::evaluate_statement(StatementId::F, ctx);
  o.expect(r.verdict != Verdict::Violated, "F violated on Ex3");
  // the coprime pair exists, so only metanilpotency keeps the right side false
  o.expect(r.side("supersoluble") == false && r.side("metanilpotent-and-coprime-ss-fcp-pair") == false,
           "F sides on Ex3");
  if (o.pass) {
    o.detail << "A4 metanilpotent, not supersoluble; Ex3 indices " << ia << "," << ib
             << " supersoluble F-C-P factors, G not supersoluble, F " << lab::name(r.verdict);
  }
}

void nilpotency(Outcome& o) {
  int nil = 0;
  for (const auto& l : catalog()) {
    auto c = nilpotency_characterizations(*l.lattice);
    o.expect(c.agree(), l.label);
    nil += c.sylows_normal;
  }
  if (o.pass) o.detail << catalog().size() << " groups, " << nil << " nilpotent";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"example-1", ex1},
      {"example-3", ex3},
      {"fitting-tower", tower},
      {"theorems-A-G", theorems},
      {"hypercenter-identity", hypercenter_identity},
      {"embedding-chain", implication_chain},
      {"oracle-equivalence", oracle_equivalence},
      {"quotient-compatibility", quotient_compat},
      {"negative-control", negative_control},
      {"nilpotency-cross-check", nilpotency},
  };
  int failures = 0, n = 0;
  for (const auto& [label, run] : criteria) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      run(o);
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    failures += !o.pass;
    std::printf("%s %2d %-24s %s (%.0f ms)\n", o.pass ? "PASS" : "FAIL", ++n, label, o.detail.str().c_str(), ms);
  }
  return failures ? 1 : 0;
}
