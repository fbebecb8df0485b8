#include <doctest.h>

#include <set>

#include "cpg/errors.hpp"
#include "cpg/expr.hpp"
#include "cpg/kernels.hpp"
#include "cpg/lattice.hpp"
#include "cpg/oracle.hpp"
#include "support.hpp"

using namespace cpg;

TEST_CASE("lattice equals the powerset oracle") {
  for (const auto& entry : default_catalog()) {
    auto g = build(entry.expr);
    if (g->order() > oracle::kPowersetLimit) continue;
    CAPTURE(entry.label);
    auto lat = all_subgroups(*g);
    std::vector<std::vector<Index>> listed;
    for (const auto& h : lat) listed.push_back(h.members().to_vector());
    CHECK(listed == oracle::powerset_subgroups(*g));
  }
}

TEST_CASE("subgroup counts") {
  // S3, S4, A4, D8, Q8 by brute force; A5 and SL(2,3) are classical
  struct Case {
    const char* expr;
    std::size_t count;
  };
  for (auto [e, n] : {Case{"S3", 6}, Case{"S4", 30}, Case{"A4", 10}, Case{"D4", 10}, Case{"Q8", 6},
                      Case{"C12", 6}, Case{"A5", 59},
                      Case{"perm(8; (1 4 7)(2 8 5), (1 6 2 3)(4 7 8 5))", 15}}) {
    CAPTURE(e);
    CHECK(all_subgroups(*build(e)).size() == n);
  }
}

TEST_CASE("serial and parallel kernels agree") {
  for (const char* e : {"S4", "C2 x S3", "AGL1(7)", "A5"}) {
    CAPTURE(e);
    auto g = build(e);
    auto serial = all_subgroups(*g, kDefaultSubgroupCap, kernels::Exec::Serial);
    auto parallel = all_subgroups(*g, kDefaultSubgroupCap, kernels::Exec::Parallel);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);

    std::span<const Subgroup> subs(serial.subgroups());
    CHECK(kernels::serial::permuting_conjugators(subs) == kernels::omp::permuting_conjugators(subs));

    std::vector<Index> gens;
    for (Index x = 1; x < g->order(); ++x) gens.push_back(x);
    auto a = kernels::serial::extend_frontier(subs.first(std::min<std::size_t>(12, subs.size())), gens);
    auto b = kernels::omp::extend_frontier(subs.first(std::min<std::size_t>(12, subs.size())), gens);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      REQUIRE(a[i].size() == b[i].size());
      for (std::size_t j = 0; j < a[i].size(); ++j) CHECK(a[i][j] == b[i][j]);
    }
  }
}

TEST_CASE("permuting conjugators by definition") {
  auto g = build("S4");
  for (const auto& h : all_subgroups(*g)) {
    auto hs = support::elements(h);
    ElementSet expect(g->order());
    for (Index x = 0; x < g->order(); ++x) {
      if (support::permutes(hs, support::conjugate(hs, g->element(x)))) expect.insert(x);
    }
    CHECK(kernels::permuting_conjugators(h) == expect);
  }
}

TEST_CASE("lattice ordering and lookup") {
  auto g = build("S4");
  auto lat = all_subgroups(*g);
  CHECK(lat[0].is_trivial());
  CHECK(lat[lat.size() - 1].is_whole());
  for (std::size_t i = 0; i + 1 < lat.size(); ++i) {
    CHECK(lat[i].order() <= lat[i + 1].order());
    CHECK(lat.position(lat[i]) == i);
  }
  CHECK_THROWS_AS(all_subgroups(*g, 10), LatticeCapExceeded);
}

TEST_CASE("maximal and normal subgroups") {
  auto g = build("S4");
  auto lat = all_subgroups(*g);
  CHECK(maximal_subgroups(lat).size() == 8);
  CHECK(normal_subgroups(lat).size() == 4);
  CHECK(maximal_subgroups(all_subgroups(*build("C1"))).empty());
  CHECK(maximal_subgroups(all_subgroups(*build("D4"))).size() == 3);
}

TEST_CASE("normalizer, centralizer, core, closure against definitions") {
  auto g = build("S4");
  for (const auto& h : all_subgroups(*g)) {
    auto hs = support::elements(h);
    ElementSet norm(g->order()), cent(g->order());
    for (Index x = 0; x < g->order(); ++x) {
      const auto& px = g->element(x);
      if (support::conjugate(hs, px) == hs) norm.insert(x);
      bool commutes = true;
      for (const auto& y : hs) commutes = commutes && px * y == y * px;
      if (commutes) cent.insert(x);
    }
    CHECK(normalizer(h).members() == norm);
    CHECK(centralizer(h).members() == cent);

    ElementSet meet = ElementSet::full(g->order());
    for (Index x = 0; x < g->order(); ++x) meet &= conjugate(h, x).members();
    CHECK(core(h).members() == meet);
    auto closure = normal_closure(h);
    CHECK(is_normal(closure));
    CHECK(h.is_subgroup_of(closure));
    for (const auto& c : conjugates(h)) CHECK(c.is_subgroup_of(closure));
  }
}

TEST_CASE("conjugacy classes") {
  auto g = build("S4");
  auto lat = all_subgroups(*g);
  auto classes = conjugacy_classes(lat);
  // independent count: orbits of member sets under conjugation
  std::set<std::set<std::vector<Index>>> orbits;
  for (const auto& h : lat) {
    std::set<std::vector<Index>> orbit;
    for (Index x = 0; x < g->order(); ++x) orbit.insert(conjugate(h, x).members().to_vector());
    orbits.insert(orbit);
  }
  CHECK(classes.size() == orbits.size());
  CHECK(classes.size() == 11);
  std::size_t total = 0;
  for (const auto& c : classes) total += c.members.size();
  CHECK(total == lat.size());
}

TEST_CASE("minimal normal subgroups") {
  CHECK(minimal_normal_subgroups(*build("S4")).size() == 1);
  CHECK(minimal_normal_subgroups(*build("C12")).size() == 2);
  CHECK(minimal_normal_subgroups(*build("C2 x C2")).size() == 3);
  CHECK_THROWS_AS(minimal_normal_subgroups(*build("C1")), TrivialGroup);
}

TEST_CASE("quotient is a homomorphism with the right kernel") {
  auto g = build("S4");
  auto v = support::sub(*g, "(1 2)(3 4), (1 3)(2 4)");
  auto e = quotient(v);
  CHECK(e.codomain().order() == 6);
  for (Index a = 0; a < g->order(); ++a) {
    for (Index b = 0; b < g->order(); ++b) {
      REQUIRE(e.image_of[g->mul(a, b)] == e.codomain().mul(e.image_of[a], e.image_of[b]));
    }
    CHECK((e.image_of[a] == FiniteGroup::identity()) == v.contains(a));
  }
  auto d = support::sub(*g, "(1 2 3 4), (1 3)");
  CHECK(image(e, d).order() == 2);
  CHECK(preimage(e, image(e, d)) == d);
  CHECK_THROWS_AS(quotient(d), NotNormal);
}
