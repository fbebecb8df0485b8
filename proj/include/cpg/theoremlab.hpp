#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cpg/charsub.hpp"
#include "cpg/expr.hpp"
#include "cpg/lattice.hpp"
#include "cpg/predicates.hpp"

namespace cpg::lab {

enum class StatementId {
  A, A1, A2, B, B1, B2, C, C1, D, D1, E, F, G,
  L2_15, L2_16, T2_2, T2_5, T2_6, L2_7, L2_10, L2_11, T2_12, T2_13, T2_14, T2_19,
  D2_21, T2_22, L2_17, L3_1, L3_2, L3_3, P3_4, C3_4_1, C3_4_2, L3_5, EX1, EX3,
};

// Registry order.
const std::vector<StatementId>& all_statements();
std::string_view name(StatementId id);  // "A", "L2.15", "C3.4.1", ...
std::optional<StatementId> parse_statement(std::string_view text);
// Statements of the form "P iff Q" (or several pairwise-equivalent conditions).
bool is_biconditional(StatementId id);

enum class Verdict { Holds, Violated, Inapplicable, Skipped };
std::string_view name(Verdict v);

// A labelled subgroup (generators in 1-based cycle notation) or, with no
// generators, a bare flag such as "side:nilpotent=true".
struct Witness {
  std::string label;
  std::vector<std::string> generators;
};

struct StatementReport {
  StatementId statement = StatementId::A;
  std::string group;
  Verdict verdict = Verdict::Skipped;
  std::vector<Witness> witnesses;
  double elapsed_ms = 0.0;

  // Value of a "side:<name>=..." flag, if recorded.
  std::optional<bool> side(std::string_view side_name) const;
};

struct Caps {
  std::size_t max_order = kDefaultOrderCap;
  std::size_t max_subgroups = kDefaultSubgroupCap;
  std::size_t max_pairs = kDefaultPairCap;
};

namespace detail {
template <class T>
class Lazy {
 public:
  template <class F>
  const T& get(F&& make) const {
    std::call_once(flag_, [&] { value_.emplace(make()); });
    return *value_;
  }

 private:
  mutable std::once_flag flag_;
  mutable std::optional<T> value_;
};
}  // namespace detail

// Per-subgroup embedding flags, indexed by lattice position.
struct EmbeddingFlags {
  std::vector<char> normal, subnormal, pronormal, abnormal, nilpotent, supersoluble, conj_perm;
};

/// Everything the checkers share about one group, computed on first use.
/// Safe to query from several threads.
class GroupContext {
 public:
  GroupContext(std::string label, std::string expr, Caps caps);
  GroupContext(std::string label, GroupPtr group, Caps caps);

  const std::string& label() const noexcept { return label_; }
  const Caps& caps() const noexcept { return caps_; }

  // These throw CapExceeded (or a parse/build Error for bad expressions).
  const FiniteGroup& group() const;
  const SubgroupLattice& lattice() const;
  const CharacteristicProfile& profile() const;
  const std::vector<Subgroup>& maximal() const;
  const std::vector<Subgroup>& normals() const;
  const std::vector<Subgroup>& sylows() const;
  const std::vector<SubgroupClass>& classes() const;
  // X_H = { x : H H^x = H^x H } for every lattice position.
  const std::vector<ElementSet>& conjugators() const;
  const ElementSet& conjugators(const Subgroup& h) const;
  const EmbeddingFlags& flags() const;

  bool nilpotent() const;
  bool supersoluble() const;
  bool metanilpotent() const;

 private:
  std::string label_;
  std::string expr_;
  Caps caps_;
  detail::Lazy<GroupPtr> group_;
  detail::Lazy<SubgroupLattice> lattice_;
  detail::Lazy<CharacteristicProfile> profile_;
  detail::Lazy<std::vector<Subgroup>> maximal_, normals_, sylows_;
  detail::Lazy<std::vector<SubgroupClass>> classes_;
  detail::Lazy<std::vector<ElementSet>> conjugators_;
  detail::Lazy<EmbeddingFlags> flags_;
  detail::Lazy<bool> nilpotent_, supersoluble_, metanilpotent_;
};

// Never throws: caps become Skipped, other errors become Skipped with the message.
StatementReport evaluate_statement(StatementId id, const GroupContext& ctx);

struct SuiteResult {
  std::vector<StatementReport> reports;  // group-major, ids in the requested order
  std::size_t count(Verdict v) const;
};

// `jobs` = 0 uses the OpenMP default team size.
SuiteResult run_suite(const std::vector<CatalogEntry>& catalog, const std::vector<StatementId>& ids,
                      const Caps& caps = {}, int jobs = 0);

Witness describe(std::string label, const Subgroup& h);

// {"group", "statement", "verdict", "witnesses": [{"label", "generators"}], "elapsed_ms"}
std::string to_json(const StatementReport& report, int indent = -1);
// {"reports": [...], "summary": {"holds": n, ...}}
std::string to_json(const SuiteResult& suite, int indent = 2);

}  // namespace cpg::lab
