#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cpg/group.hpp"

namespace cpg {

/// Group expressions:
///
///   expr := term ( "x" term )*
///   term := NAME "(" int ")" | NAME int | "perm(" int ";" cycles ( "," cycles )* ")"
///
/// Names (case-insensitive): C n (cyclic), D n (dihedral of ORDER 2n, so D4
/// is the order-8 group), S n, A n, Q8, AGL1(p), Ex3. Cycle points are
/// 1-based. Products associate to the left.
class GroupExpr {
 public:
  enum class Kind { Named, DirectProduct, RawPerm };

  static GroupExpr named(std::string name, std::size_t arg);
  static GroupExpr product(GroupExpr left, GroupExpr right);
  static GroupExpr raw(std::size_t degree, std::vector<Permutation> generators);

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }  // canonical upper case
  std::size_t arg() const noexcept { return arg_; }
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const GroupExpr& left() const { return children_.at(0); }
  const GroupExpr& right() const { return children_.at(1); }

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;

 private:
  Kind kind_ = Kind::Named;
  std::string name_;
  std::size_t arg_ = 0;
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<GroupExpr> children_;
};

// Throws ParseError with the byte offset and the expected-token set.
GroupExpr parse_expr(std::string_view text);
std::string to_string(const GroupExpr& e);

// Throws UnknownName, ClosureCapExceeded, or Error for bad arguments.
GroupPtr build(const GroupExpr& e, std::size_t order_cap = kDefaultOrderCap);
inline GroupPtr build(std::string_view text, std::size_t order_cap = kDefaultOrderCap) {
  return build(parse_expr(text), order_cap);
}

struct CatalogEntry {
  std::string label;
  std::string expr;
};

std::string_view default_catalog_json();
std::vector<CatalogEntry> parse_catalog(std::string_view json_text);
std::vector<CatalogEntry> default_catalog();
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path);

}  // namespace cpg
