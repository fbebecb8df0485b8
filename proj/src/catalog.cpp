#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cpg/errors.hpp"
#include "cpg/expr.hpp"

namespace cpg {

std::vector<CatalogEntry> parse_catalog(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("catalog: ") + e.what(), e.byte, {"<json>"});
  }
  if (!doc.is_array()) throw ParseError("catalog: expected a JSON array", 0, {"["});
  std::vector<CatalogEntry> out;
  for (const auto& item : doc) {
    if (item.is_string()) {
      auto s = item.get<std::string>();
      out.push_back({s, s});
      continue;
    }
    if (!item.is_object() || !item.contains("expr")) {
      throw ParseError("catalog: each entry needs an \"expr\"", 0, {"{\"label\", \"expr\"}"});
    }
    auto expr = item.at("expr").get<std::string>();
    auto label = item.value("label", expr);
    out.push_back({std::move(label), std::move(expr)});
  }
  return out;
}

std::vector<CatalogEntry> default_catalog() { return parse_catalog(default_catalog_json()); }

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog(buf.str());
}

}  // namespace cpg
