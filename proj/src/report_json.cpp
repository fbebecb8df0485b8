#include <json.hpp>

#include "cpg/theoremlab.hpp"

namespace cpg::lab {

namespace {

nlohmann::json report_object(const StatementReport& r) {
  nlohmann::json ws = nlohmann::json::array();
  for (const auto& w : r.witnesses) ws.push_back({{"label", w.label}, {"generators", w.generators}});
  return {{"group", r.group},
          {"statement", std::string(name(r.statement))},
          {"verdict", std::string(name(r.verdict))},
          {"witnesses", std::move(ws)},
          {"elapsed_ms", r.elapsed_ms}};
}

}  // namespace

std::string to_json(const StatementReport& report, int indent) { return report_object(report).dump(indent); }

std::string to_json(const SuiteResult& suite, int indent) {
  nlohmann::json reports = nlohmann::json::array();
  for (const auto& r : suite.reports) reports.push_back(report_object(r));
  nlohmann::json summary;
  for (auto v : {Verdict::Holds, Verdict::Violated, Verdict::Inapplicable, Verdict::Skipped}) {
    summary[std::string(name(v))] = suite.count(v);
  }
  return nlohmann::json{{"reports", std::move(reports)}, {"summary", std::move(summary)}}.dump(indent);
}

}  // namespace cpg::lab
