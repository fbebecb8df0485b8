#include "cpg/expr.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "cpg/cycle_notation.hpp"
#include "cpg/errors.hpp"

namespace cpg {

ParseError::ParseError(std::string message, std::size_t offset, std::vector<std::string> expected)
    : Error(message + " at byte " + std::to_string(offset)),
      offset_(offset),
      expected_(std::move(expected)) {}

GroupExpr GroupExpr::named(std::string name, std::size_t arg) {
  GroupExpr e;
  e.kind_ = Kind::Named;
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  e.name_ = std::move(name);
  e.arg_ = arg;
  return e;
}

GroupExpr GroupExpr::product(GroupExpr left, GroupExpr right) {
  GroupExpr e;
  e.kind_ = Kind::DirectProduct;
  e.children_.push_back(std::move(left));
  e.children_.push_back(std::move(right));
  return e;
}

GroupExpr GroupExpr::raw(std::size_t degree, std::vector<Permutation> generators) {
  GroupExpr e;
  e.kind_ = Kind::RawPerm;
  e.degree_ = degree;
  e.generators_ = std::move(generators);
  return e;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupExpr parse() {
    GroupExpr e = term();
    while (true) {
      skip_ws();
      if (at_end()) break;
      if (!at_product_operator()) throw error("unexpected input", {"x", "<end>"});
      ++pos_;
      e = GroupExpr::product(std::move(e), term());
    }
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_product_operator() const {
    if (peek() != 'x' && peek() != 'X') return false;
    if (pos_ + 1 >= text_.size()) return true;
    return !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1]));
  }

  ParseError error(const std::string& message, std::vector<std::string> expected) const {
    return ParseError(message, pos_, std::move(expected));
  }

  std::size_t integer() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw error("expected an integer", {"<int>"});
    std::size_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1000000) throw error("integer too large", {"<int>"});
      ++pos_;
    }
    return value;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c) throw error(std::string("expected '") + c + "'", {std::string(1, c)});
    ++pos_;
  }

  GroupExpr term() {
    skip_ws();
    if (!std::isalpha(static_cast<unsigned char>(peek()))) throw error("expected a group name", {"<name>", "perm("});
    const std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek()))) ++pos_;
    std::string ident(text_.substr(start, pos_ - start));
    std::string lower = ident;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });

    skip_ws();
    if (lower == "perm" && peek() == '(') {
      ++pos_;
      return raw_perm();
    }
    if (peek() == '(') {
      ++pos_;
      std::size_t arg = integer();
      expect(')');
      return GroupExpr::named(ident, arg);
    }
    // NAME digits: split the trailing number off the identifier
    std::size_t split = ident.size();
    while (split > 0 && std::isdigit(static_cast<unsigned char>(ident[split - 1]))) --split;
    if (split == ident.size() || split == 0) {
      pos_ = start + ident.size();
      throw error("expected an order after the group name", {"<int>", "("});
    }
    return GroupExpr::named(ident.substr(0, split), std::stoul(ident.substr(split)));
  }

  GroupExpr raw_perm() {
    const std::size_t degree = integer();
    if (degree == 0) throw error("degree must be positive", {"<int>"});
    expect(';');
    std::vector<Permutation> gens;
    skip_ws();
    if (peek() == ')') {
      ++pos_;
      return GroupExpr::raw(degree, std::move(gens));
    }
    while (true) {
      skip_ws();
      const std::size_t start = pos_;
      int depth = 0;
      while (!at_end()) {
        char c = text_[pos_];
        if (c == '(') {
          if (depth) throw error("nested '('", {"<point>", ")"});
          depth = 1;
        } else if (c == ')') {
          if (!depth) break;
          depth = 0;
        } else if (c == ',' && !depth) {
          break;
        }
        ++pos_;
      }
      if (at_end()) throw error("unterminated perm(...)", {")"});
      gens.push_back(parse_cycles(text_.substr(start, pos_ - start), degree, start));
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      ++pos_;  // ','
    }
    return GroupExpr::raw(degree, std::move(gens));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Permutation from_map(std::size_t degree, auto&& f) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(f(i));
  return Permutation(std::move(images));
}

Permutation cycle_on(std::size_t degree, std::vector<std::size_t> points) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < points.size(); ++i) {
    images[points[i]] = static_cast<Point>(points[(i + 1) % points.size()]);
  }
  return Permutation(std::move(images));
}

Permutation rotation(std::size_t n) {
  return from_map(n, [n](std::size_t i) { return (i + 1) % n; });
}

std::vector<Permutation> quaternion_generators() {
  // element = sign * 4 + unit, units 1, i, j, k; right regular representation
  static constexpr int kUnitSign[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static constexpr int kUnitProd[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  auto right_mul = [&](std::size_t g) {
    return from_map(8, [&](std::size_t q) {
      std::size_t qs = q / 4, qu = q % 4, gs = g / 4, gu = g % 4;
      int sign = (qs ? -1 : 1) * (gs ? -1 : 1) * kUnitSign[qu][gu];
      return (sign < 0 ? 4 : 0) + static_cast<std::size_t>(kUnitProd[qu][gu]);
    });
  };
  return {right_mul(1), right_mul(2)};
}

std::vector<Permutation> example3_generators() {
  // affine maps of F_7^2; S_3 acts through its 2-dimensional representation on
  // the sum-zero plane of F_7^3 in the basis u = e1 - e2, v = e2 - e3
  constexpr std::size_t p = 7;
  auto point = [](std::size_t a, std::size_t b) { return (a % p) * p + (b % p); };
  auto affine = [&](auto&& f) {
    return from_map(p * p, [&](std::size_t i) {
      auto [a, b] = f(i / p, i % p);
      return point(a, b);
    });
  };
  return {
      affine([](std::size_t a, std::size_t b) { return std::pair{a + 1, b}; }),
      affine([](std::size_t a, std::size_t b) { return std::pair{a, b + 1}; }),
      // 3-cycle: u -> v, v -> -u - v
      affine([](std::size_t a, std::size_t b) { return std::pair{p - b, a + p - b}; }),
      // transposition: u -> -u, v -> u + v
      affine([](std::size_t a, std::size_t b) { return std::pair{b + p - a, b}; }),
  };
}

std::size_t primitive_root(std::size_t p) {
  for (std::size_t g = 1; g < p; ++g) {
    std::size_t x = 1, ord = 0;
    do {
      x = x * g % p;
      ++ord;
    } while (x != 1);
    if (ord == p - 1) return g;
  }
  return 1;
}

GroupPtr build_named(const std::string& name, std::size_t n, std::size_t cap) {
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw Error(name + std::to_string(n) + ": " + what);
  };
  if (name == "C") {
    need(n >= 1, "order must be positive");
    if (n == 1) return closure(1, {}, cap);
    return closure(n, {rotation(n)}, cap);
  }
  if (name == "D") {
    need(n >= 1, "index must be positive");
    if (n == 1) return closure(2, {rotation(2)}, cap);
    if (n == 2) return closure(4, {cycle_on(4, {0, 1}), cycle_on(4, {2, 3})}, cap);
    auto reflection = from_map(n, [n](std::size_t i) { return (n - i) % n; });
    return closure(n, {rotation(n), reflection}, cap);
  }
  if (name == "S") {
    need(n >= 1, "degree must be positive");
    if (n == 1) return closure(1, {}, cap);
    if (n == 2) return closure(2, {rotation(2)}, cap);
    return closure(n, {rotation(n), cycle_on(n, {0, 1})}, cap);
  }
  if (name == "A") {
    need(n >= 1, "degree must be positive");
    std::vector<Permutation> gens;
    for (std::size_t i = 2; i < n; ++i) gens.push_back(cycle_on(n, {0, 1, i}));
    return closure(n, std::move(gens), cap);
  }
  if (name == "Q") {
    need(n == 8, "only Q8 is available");
    return closure(8, quaternion_generators(), cap);
  }
  if (name == "AGL1") {
    need(is_prime(n), "argument must be prime");
    const std::size_t w = primitive_root(n);
    return closure(n,
                   {rotation(n), from_map(n, [n, w](std::size_t i) { return i * w % n; })},
                   cap);
  }
  if (name == "EX") {
    need(n == 3, "only Ex3 is available");
    return closure(49, example3_generators(), cap);
  }
  throw UnknownName("unknown group name '" + name + "'");
}

}  // namespace

GroupExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const GroupExpr& e) {
  switch (e.kind()) {
    case GroupExpr::Kind::DirectProduct:
      return to_string(e.left()) + " x " + to_string(e.right());
    case GroupExpr::Kind::RawPerm: {
      std::string out = "perm(" + std::to_string(e.degree()) + ";";
      for (std::size_t i = 0; i < e.generators().size(); ++i) {
        out += (i ? ", " : " ") + to_cycles(e.generators()[i]);
      }
      return out + ")";
    }
    case GroupExpr::Kind::Named:
      break;
  }
  if (e.name() == "AGL1") return "AGL1(" + std::to_string(e.arg()) + ")";
  if (e.name() == "EX") return "Ex" + std::to_string(e.arg());
  if (std::isdigit(static_cast<unsigned char>(e.name().back()))) {
    return e.name() + "(" + std::to_string(e.arg()) + ")";
  }
  return e.name() + std::to_string(e.arg());
}

GroupPtr build(const GroupExpr& e, std::size_t order_cap) {
  switch (e.kind()) {
    case GroupExpr::Kind::Named:
      return build_named(e.name(), e.arg(), order_cap);
    case GroupExpr::Kind::DirectProduct: {
      auto left = build(e.left(), order_cap);
      auto right = build(e.right(), order_cap);
      return direct_product(*left, *right, order_cap);
    }
    case GroupExpr::Kind::RawPerm:
      return closure(e.degree(), e.generators(), order_cap);
  }
  throw Error("unreachable expression kind");
}

}  // namespace cpg
