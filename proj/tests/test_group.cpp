#include <doctest.h>

#include "cpg/errors.hpp"
#include "cpg/expr.hpp"
#include "cpg/group.hpp"
#include "support.hpp"

using namespace cpg;

namespace {

void check_arithmetic(const FiniteGroup& g) {
  REQUIRE(g.element(FiniteGroup::identity()).is_identity());
  for (Index a = 0; a < g.order(); a += 1 + g.order() / 40) {
    for (Index b = 0; b < g.order(); b += 1 + g.order() / 40) {
      REQUIRE(g.element(g.mul(a, b)) == compose(g.element(a), g.element(b)));
    }
    REQUIRE(g.element(g.inv(a)) == inverse(g.element(a)));
    REQUIRE(g.element_order(a) == order(g.element(a)));
  }
}

}  // namespace

TEST_CASE("closure matches a naive closure") {
  for (const char* e : {"S4", "D5", "Q8", "AGL1(7)", "C2 x S3"}) {
    CAPTURE(e);
    auto g = build(e);
    auto naive = support::closure(g->degree(), g->generators());
    CHECK(naive.size() == g->order());
    check_arithmetic(*g);
  }
}

TEST_CASE("products without a table") {
  auto g = build("S7");
  CHECK(g->order() == 5040);
  CHECK_FALSE(g->has_table());
  check_arithmetic(*g);
}

TEST_CASE("closure cap") {
  CHECK_THROWS_AS(build("S6", 100), ClosureCapExceeded);
  try {
    build("S6", 100);
  } catch (const CapExceeded& e) {
    CHECK(e.cap_name() == "max-order");
  }
}

TEST_CASE("conjugation is x^-1 h x") {
  auto g = build("S4");
  Index h = support::elem(*g, "(1 2)");
  Index x = support::elem(*g, "(2 3)");
  CHECK(to_cycles(g->element(g->conj(h, x))) == "(1 3)");
  Index c = g->commutator(h, x);
  CHECK(g->element(c) == inverse(g->element(h)) * inverse(g->element(x)) * g->element(h) * g->element(x));
}

TEST_CASE("direct product") {
  auto a = build("C3");
  auto b = build("S3");
  auto p = direct_product(*a, *b);
  CHECK(p->order() == 18);
  CHECK(p->degree() == 6);
}

TEST_CASE("subgroup operations agree with set arithmetic") {
  auto g = build("S4");
  auto h = support::sub(*g, "(1 2)");
  auto k = support::sub(*g, "(2 3)");
  auto v = support::sub(*g, "(1 2)(3 4), (1 3)(2 4)");
  auto d = support::sub(*g, "(1 2 3 4), (1 3)");

  CHECK(join(h, k).order() == 6);
  CHECK(intersection(d, v) == v);
  CHECK(set_product(h, k).size() == 4);
  CHECK(ElementSubset(support::from_set(*g, support::product(support::elements(h), support::elements(k))))
            == set_product(h, k));
  CHECK_FALSE(permutes(h, k));
  CHECK(permutes(h, v));
  CHECK(permutes(h, v) == support::permutes(support::elements(h), support::elements(v)));

  CHECK(is_normal(v));
  CHECK_FALSE(is_normal(d));
  CHECK(is_normal_in(v, d));
  Index x = support::elem(*g, "(1 2 3)");
  CHECK(support::elements(conjugate(d, x)) == support::conjugate(support::elements(d), g->element(x)));
  CHECK(is_closed_subgroup(*g, d.members()));
  CHECK_FALSE(is_closed_subgroup(*g, set_product(h, k).members()));
}

TEST_CASE("generators reproduce the subgroup") {
  auto g = build("AGL1(7)");
  for (Index x = 0; x < g->order(); ++x) {
    auto h = join(cyclic_subgroup(*g, x), support::elem(*g, "(1 2 3 4 5 6 7)"));
    auto gens = generators(h);
    CHECK(generate(*g, gens) == h);
  }
}

TEST_CASE("a subgroup as a group") {
  auto g = build("S4");
  auto d = support::sub(*g, "(1 2 3 4), (1 3)");
  auto emb = as_group(d);
  CHECK(emb.group->order() == 8);
  for (Index i = 0; i < emb.group->order(); ++i) {
    CHECK(d.contains(emb.to_parent[i]));
    CHECK(emb.from_parent.at(emb.to_parent[i]) == i);
  }
  auto v = support::sub(*g, "(1 2)(3 4), (1 3)(2 4)");
  CHECK(emb.lift(emb.restrict(v)) == v);
}
