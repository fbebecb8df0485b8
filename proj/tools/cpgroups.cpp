// cpgroups: subgroup lattices, characteristic subgroups and conjugate-permutability
// checks for small permutation groups.
//
//   cpgroups analyze S4
//   cpgroups subgroups "C2 x S3" --json
//   cpgroups rcp S4 --sub "(1 2 3 4), (1 3)" --r fitting
//   cpgroups verify --statements all --catalog default --out report.json
//   cpgroups oracle Q8
//
// Exit status: 0 ok, 1 a violated verdict (or an oracle mismatch), 2 usage or
// parse error, 3 a size cap was hit.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "cpg/charsub.hpp"
#include "cpg/cycle_notation.hpp"
#include "cpg/errors.hpp"
#include "cpg/expr.hpp"
#include "cpg/kernels.hpp"
#include "cpg/oracle.hpp"
#include "cpg/predicates.hpp"
#include "cpg/theoremlab.hpp"

using namespace cpg;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;
constexpr int kCap = 3;

struct Options {
  bool json = false;
  lab::Caps caps;
  int jobs = 0;
};

json gens_json(const Subgroup& h) {
  auto w = lab::describe("", h);
  return w.generators;
}

std::string gens_text(const Subgroup& h) {
  std::string out;
  for (const auto& g : lab::describe("", h).generators) out += (out.empty() ? "" : ", ") + g;
  return "<" + out + ">";
}

std::string yes(bool b) { return b ? "yes" : "no"; }

GroupPtr load(const std::string& text, const Options& o) { return build(text, o.caps.max_order); }

// A comma-separated generator list in 1-based cycle notation.
std::vector<Index> parse_elements(const FiniteGroup& g, const std::string& text) {
  auto e = parse_expr("perm(" + std::to_string(g.degree()) + "; " + text + ")");
  std::vector<Index> out;
  for (const auto& p : e.generators()) {
    auto i = g.index_of(p);
    if (!i) throw ParseError("element " + to_cycles(p) + " is not in the group", 0, {"<element of G>"});
    out.push_back(*i);
  }
  return out;
}

int cmd_analyze(const std::string& text, const Options& o) {
  auto g = load(text, o);
  auto lat = all_subgroups(*g, o.caps.max_subgroups);
  auto p = characteristic_profile(lat);
  const std::vector<std::pair<std::string, const Subgroup*>> rows{
      {"Z", &p.center},   {"Z_inf", &p.hypercenter}, {"G'", &p.derived}, {"F", &p.fitting},
      {"Phi", &p.frattini}, {"Soc", &p.socle},         {"F*", &p.f_star},  {"F~", &p.f_tilde}};
  const std::vector<std::pair<std::string, bool>> flags{
      {"nilpotent", is_nilpotent(*g)},       {"soluble", is_soluble(*g)},
      {"supersoluble", is_supersoluble(*g)}, {"metanilpotent", is_metanilpotent(*g)},
      {"quasinilpotent", is_quasinilpotent(*g)}};
  if (o.json) {
    json out{{"group", text}, {"order", g->order()}, {"degree", g->degree()}, {"subgroups", lat.size()}};
    for (const auto& [name, h] : rows) out["characteristic"][name] = {{"order", h->order()}, {"generators", gens_json(*h)}};
    for (const auto& [name, v] : flags) out["flags"][name] = v;
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << text << ": order " << g->order() << ", degree " << g->degree() << ", "
            << lat.size() << " subgroups\n";
  for (const auto& [name, h] : rows) {
    std::cout << "  " << std::left << std::setw(6) << name << std::right << std::setw(6) << h->order()
              << "  " << gens_text(*h) << "\n";
  }
  for (const auto& [name, v] : flags) std::cout << "  " << std::left << std::setw(15) << name << yes(v) << "\n";
  return kOk;
}

int cmd_subgroups(const std::string& text, const Options& o) {
  auto g = load(text, o);
  auto lat = all_subgroups(*g, o.caps.max_subgroups);
  auto classes = conjugacy_classes(lat);
  auto sylows = all_sylow_subgroups(*g);
  auto xs = kernels::permuting_conjugators(std::span<const Subgroup>(lat.subgroups()), kernels::Exec::Parallel);
  json arr = json::array();
  if (!o.json) {
    std::cout << text << ": " << lat.size() << " subgroups in " << classes.size() << " classes\n";
    std::cout << " order  size   C-P S-perm qnorm subnorm pronorm abnorm  generators\n";
  }
  for (const auto& c : classes) {
    const auto& h = lat[c.representative];
    const bool cp = xs[c.representative].count() == g->order();
    const std::vector<std::pair<std::string, bool>> f{
        {"conjugate_permutable", cp},          {"s_permutable", is_s_permutable(h, sylows)},
        {"quasinormal", is_quasinormal(lat, h)}, {"subnormal", is_subnormal(h)},
        {"pronormal", is_pronormal(h)},        {"abnormal", is_abnormal(h)}};
    if (o.json) {
      json row{{"order", h.order()}, {"class_size", c.members.size()}, {"generators", gens_json(h)}};
      for (const auto& [k, v] : f) row[k] = v;
      arr.push_back(row);
      continue;
    }
    std::cout << std::setw(6) << h.order() << std::setw(6) << c.members.size();
    const int widths[] = {6, 7, 6, 8, 8, 7};
    for (std::size_t i = 0; i < f.size(); ++i) std::cout << std::setw(widths[i]) << yes(f[i].second);
    std::cout << "  " << gens_text(h) << "\n";
  }
  if (o.json) std::cout << json{{"group", text}, {"subgroups", lat.size()}, {"classes", arr}}.dump(2) << "\n";
  return kOk;
}

int cmd_rcp(const std::string& text, const std::string& sub, const std::string& r_spec, const Options& o) {
  auto g = load(text, o);
  auto h = generate(*g, parse_elements(*g, sub));
  ElementSet r(g->order());
  if (r_spec == "fitting") {
    r = fitting(*g).members();
  } else if (r_spec == "fstar") {
    r = f_star(*g).members();
  } else if (r_spec == "ftilde") {
    r = f_tilde(frattini(*g)).members();
  } else {
    for (Index x : parse_elements(*g, r_spec)) r.insert(x);
  }
  // Definition checked directly: HH^x = H^xH for each x in R
  std::vector<Index> failures;
  r.for_each([&](Index x) {
    if (!permutes(h, conjugate(h, x))) failures.push_back(x);
  });
  const bool holds = failures.empty();
  if (o.json) {
    json bad = json::array();
    for (Index x : failures) bad.push_back(to_cycles(g->element(x)));
    std::cout << json{{"group", text}, {"subgroup", gens_json(h)}, {"subgroup_order", h.order()},
                      {"r", r_spec}, {"r_size", r.count()}, {"r_conjugate_permutable", holds},
                      {"failing_x", bad}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "H = " << gens_text(h) << " (order " << h.order() << "), |R| = " << r.count() << "\n";
    std::cout << "R-conjugate-permutable: " << yes(holds) << "\n";
    if (!holds) std::cout << "  first failing x: " << to_cycles(g->element(failures.front())) << "\n";
  }
  return kOk;
}

int cmd_verify(const std::string& statements, const std::string& catalog_name, const std::string& out_path,
               const Options& o) {
  std::vector<lab::StatementId> ids;
  if (statements == "all") {
    ids = lab::all_statements();
  } else {
    std::stringstream ss(statements);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      auto id = lab::parse_statement(tok);
      if (!id) throw ParseError("unknown statement id '" + tok + "'", 0, {"<statement id>", "all"});
      ids.push_back(*id);
    }
  }
  auto catalog = catalog_name == "default" ? default_catalog() : load_catalog(catalog_name);
  auto suite = lab::run_suite(catalog, ids, o.caps, o.jobs);
  const std::string text = lab::to_json(suite);
  if (out_path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream(out_path) << text << "\n";
  }
  std::cerr << suite.reports.size() << " reports: " << suite.count(lab::Verdict::Holds) << " holds, "
              << suite.count(lab::Verdict::Violated) << " violated, "
              << suite.count(lab::Verdict::Inapplicable) << " inapplicable, "
              << suite.count(lab::Verdict::Skipped) << " skipped\n";
  if (suite.count(lab::Verdict::Violated)) return kViolated;
  for (const auto& r : suite.reports) {
    if (r.verdict == lab::Verdict::Skipped && !r.witnesses.empty() && r.witnesses.front().label.starts_with("cap:")) {
      return kCap;
    }
  }
  return kOk;
}

int cmd_oracle(const std::string& text, const Options& o) {
  auto g = load(text, o);
  auto brute = oracle::powerset_subgroups(*g);
  auto lat = all_subgroups(*g, o.caps.max_subgroups);
  std::vector<std::vector<Index>> listed;
  for (const auto& h : lat) listed.push_back(h.members().to_vector());
  std::vector<std::vector<Index>> only_oracle, only_lattice;
  std::set_difference(brute.begin(), brute.end(), listed.begin(), listed.end(), std::back_inserter(only_oracle));
  std::set_difference(listed.begin(), listed.end(), brute.begin(), brute.end(), std::back_inserter(only_lattice));
  const bool same = only_oracle.empty() && only_lattice.empty();
  if (o.json) {
    std::cout << json{{"group", text}, {"oracle", brute.size()}, {"lattice", listed.size()},
                      {"only_oracle", only_oracle}, {"only_lattice", only_lattice}, {"agree", same}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << text << ": oracle " << brute.size() << ", lattice " << listed.size() << " subgroups; "
              << (same ? "identical" : "DIFFERENT") << "\n";
    for (const auto& m : only_oracle) std::cout << "  only in oracle: " << m.size() << " elements\n";
    for (const auto& m : only_lattice) std::cout << "  only in lattice: " << m.size() << " elements\n";
  }
  return same ? kOk : kViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgroup lattices and conjugate-permutability checks for permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--max-order", o.caps.max_order, "Largest group order to enumerate")->capture_default_str();
  app.add_option("--max-subgroups", o.caps.max_subgroups, "Largest subgroup lattice")->capture_default_str();
  app.add_option("--max-pairs", o.caps.max_pairs, "Largest subgroup-pair search")->capture_default_str();
  app.add_option("--jobs", o.jobs, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);

  std::string expr, sub, r_spec, statements = "all", catalog = "default", out_path;
  auto* analyze = app.add_subcommand("analyze", "Characteristic subgroups and class memberships");
  analyze->add_option("expr", expr, "Group expression, e.g. S4 or \"C2 x S3\"")->required();
  auto* subgroups = app.add_subcommand("subgroups", "Conjugacy classes of subgroups with embedding flags");
  subgroups->add_option("expr", expr)->required();
  auto* rcp = app.add_subcommand("rcp", "Is <sub> R-conjugate-permutable?");
  rcp->add_option("expr", expr)->required();
  rcp->add_option("--sub", sub, "Generators of H, e.g. \"(1 2 3 4), (1 3)\"")->required();
  rcp->add_option("--r", r_spec, "fitting | fstar | ftilde | an element list")->required();
  auto* verify = app.add_subcommand("verify", "Evaluate the statement registry over a catalog");
  verify->add_option("--statements", statements, "Comma-separated ids or 'all'")->capture_default_str();
  verify->add_option("--catalog", catalog, "'default' or a JSON catalog file")->capture_default_str();
  verify->add_option("--out", out_path, "Write the JSON report here instead of stdout");
  auto* oracle_cmd = app.add_subcommand("oracle", "Compare the lattice with a powerset search (|G| <= 16)");
  oracle_cmd->add_option("expr", expr)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (o.jobs > 0) kernels::set_threads(o.jobs);
  try {
    if (*analyze) return cmd_analyze(expr, o);
    if (*subgroups) return cmd_subgroups(expr, o);
    if (*rcp) return cmd_rcp(expr, sub, r_spec, o);
    if (*verify) return cmd_verify(statements, catalog, out_path, o);
    if (*oracle_cmd) return cmd_oracle(expr, o);
  } catch (const CapExceeded& e) {
    std::cerr << "cpgroups: " << e.what() << "\n";
    return kCap;
  } catch (const ParseError& e) {
    std::cerr << "cpgroups: " << e.what();
    if (!e.expected().empty()) {
      std::cerr << " (expected";
      for (const auto& t : e.expected()) std::cerr << " " << t;
      std::cerr << ")";
    }
    std::cerr << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "cpgroups: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
