#include <doctest.h>

#include "cpg/charsub.hpp"
#include "cpg/errors.hpp"
#include "cpg/expr.hpp"
#include "cpg/predicates.hpp"

using namespace cpg;

TEST_CASE("parse shapes") {
  auto s4 = parse_expr("S4");
  CHECK(s4.kind() == GroupExpr::Kind::Named);
  CHECK(s4.name() == "S");
  CHECK(s4.arg() == 4);

  auto p = parse_expr("C2 x S3");
  REQUIRE(p.kind() == GroupExpr::Kind::DirectProduct);
  CHECK(p.left() == GroupExpr::named("C", 2));
  CHECK(p.right() == GroupExpr::named("S", 3));

  auto raw = parse_expr("perm(5; (1 2 3 4 5), (2 5)(3 4))");
  REQUIRE(raw.kind() == GroupExpr::Kind::RawPerm);
  CHECK(raw.degree() == 5);
  CHECK(raw.generators().size() == 2);

  CHECK(parse_expr("agl1(5)") == GroupExpr::named("AGL1", 5));
  CHECK(parse_expr("s(4)") == parse_expr("S4"));
  CHECK(parse_expr("ex3") == GroupExpr::named("EX", 3));
}

TEST_CASE("products associate to the left") {
  auto e = parse_expr("C2 x C3 x C5");
  REQUIRE(e.kind() == GroupExpr::Kind::DirectProduct);
  CHECK(e.right() == GroupExpr::named("C", 5));
  CHECK(e.left().kind() == GroupExpr::Kind::DirectProduct);
  CHECK(build(e)->order() == 30);
}

TEST_CASE("parse errors report offset and expectation") {
  auto offset_of = [](const char* text) -> std::size_t {
    try {
      parse_expr(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return 999;
  };
  CHECK(offset_of("S4 x") == 4);
  CHECK(offset_of("S4 S3") == 3);
  CHECK(offset_of("perm(3; (1 2), (1 4))") == 18);
  CHECK(offset_of("") == 0);
  try {
    parse_expr("S4 +");
  } catch (const ParseError& e) {
    CHECK(e.expected() == std::vector<std::string>{"x", "<end>"});
  }
}

TEST_CASE("print round-trips the catalog") {
  for (const auto& entry : default_catalog()) {
    CAPTURE(entry.expr);
    auto e = parse_expr(entry.expr);
    CHECK(parse_expr(to_string(e)) == e);
  }
  CHECK(to_string(parse_expr("c2 x s3")) == "C2 x S3");
}

TEST_CASE("constructors") {
  struct Case {
    const char* expr;
    std::size_t order;
  };
  for (auto [expr, n] : {Case{"C1", 1}, Case{"C12", 12}, Case{"D1", 2}, Case{"D2", 4}, Case{"D4", 8},
                         Case{"D5", 10}, Case{"S1", 1}, Case{"S4", 24}, Case{"A3", 3}, Case{"A5", 60},
                         Case{"Q8", 8}, Case{"AGL1(5)", 20}, Case{"AGL1(7)", 42}, Case{"Ex3", 294}}) {
    CAPTURE(expr);
    CHECK(build(expr)->order() == n);
  }
  CHECK_THROWS_AS(build("Z5"), UnknownName);
  CHECK_THROWS_AS(build("AGL1(6)"), Error);
  CHECK_THROWS_AS(build("Q16"), Error);
}

TEST_CASE("Q8 is the quaternion group") {
  auto g = build("Q8");
  std::size_t involutions = 0;
  for (Index x = 0; x < g->order(); ++x) involutions += g->element_order(x) == 2;
  CHECK(involutions == 1);
  CHECK_FALSE(derived_subgroup(*g).is_trivial());
}

TEST_CASE("Ex3") {
  auto g = build("Ex3");
  CHECK(g->order() == 294);
  CHECK(fitting(*g).order() == 49);
  CHECK_FALSE(is_supersoluble(*g));
}

TEST_CASE("catalog") {
  auto cat = default_catalog();
  std::vector<std::string> labels;
  for (const auto& e : cat) labels.push_back(e.label);
  for (const char* need : {"C1", "C2", "C6", "C12", "S3", "S4", "A4", "A5", "D4", "D5", "Q8", "AGL1(5)",
                           "SL(2,3)", "C2xS3", "C3xS3", "Ex3"}) {
    CHECK(std::find(labels.begin(), labels.end(), need) != labels.end());
  }
  auto parsed = parse_catalog(R"([{"label": "x", "expr": "C2"}, "S3"])");
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[1].label == "S3");
  CHECK(parse_catalog("[]").empty());
  CHECK_THROWS_AS(parse_catalog("{"), ParseError);
  CHECK(build(cat[14].expr)->order() == 24);
}
