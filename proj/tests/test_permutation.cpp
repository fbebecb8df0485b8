#include <doctest.h>

#include "cpg/cycle_notation.hpp"
#include "cpg/errors.hpp"
#include "cpg/permutation.hpp"

using namespace cpg;

TEST_CASE("composition reads left to right") {
  auto p = parse_cycles("(1 2)", 3);
  auto q = parse_cycles("(2 3)", 3);
  // 1 -p-> 2 -q-> 3
  CHECK(compose(p, q)(0) == 2);
  CHECK(to_cycles(p * q) == "(1 3 2)");
  CHECK(to_cycles(q * p) == "(1 2 3)");
}

TEST_CASE("inverse and identity") {
  auto p = parse_cycles("(1 4 2)(3 5)", 5);
  CHECK((p * inverse(p)).is_identity());
  CHECK((inverse(p) * p).is_identity());
  CHECK(Permutation::identity(4).is_identity());
  CHECK(to_cycles(Permutation::identity(4)) == "()");
}

TEST_CASE("element order is the lcm of cycle lengths") {
  CHECK(order(parse_cycles("(1 2 3)(4 5)", 5)) == 6);
  CHECK(order(parse_cycles("(1 2)(3 4)", 4)) == 2);
  CHECK(order(Permutation::identity(3)) == 1);
  auto p = parse_cycles("(1 2 3 4 5 6 7)", 7);
  Permutation acc = Permutation::identity(7);
  for (int i = 0; i < 7; ++i) acc = acc * p;
  CHECK(acc.is_identity());
}

TEST_CASE("invalid images are rejected") {
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), InvalidPermutation);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 3}), InvalidPermutation);
  CHECK_THROWS_AS(compose(Permutation::identity(2), Permutation::identity(3)), DegreeMismatch);
}

TEST_CASE("cycle notation round trip") {
  for (const char* text : {"()", "(1 2)", "(1 3 2)(4 5)", "(2 6 3)"}) {
    CHECK(to_cycles(parse_cycles(text, 6)) == text);
  }
  // whitespace and a rotated cycle normalise to the smallest point first
  CHECK(to_cycles(parse_cycles(" ( 3 1 2 ) ", 3)) == "(1 2 3)");
}

TEST_CASE("cycle notation errors carry offsets") {
  try {
    parse_cycles("(1 2)(3 9)", 5, 10);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 18);
  }
  CHECK_THROWS_AS(parse_cycles("(1 2 1)", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("1 2", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(1 2", 3), ParseError);
  CHECK_THROWS_AS(parse_cycles("(0 1)", 3), ParseError);
}

TEST_CASE("pad moves the support") {
  auto p = pad(parse_cycles("(1 2)", 2), 5, 3);
  CHECK(to_cycles(p) == "(4 5)");
  CHECK(p.degree() == 5);
}
