#include "margpoly/catalog.hpp"

#include <charconv>

#include <json.hpp>

#include "margpoly/error.hpp"

namespace margpoly {

namespace detail {
extern const char* const kCatalogJson;
}

namespace {

std::vector<NamedGraph> load() {
  const auto j = nlohmann::json::parse(detail::kCatalogJson);
  std::vector<NamedGraph> out;
  for (const auto& entry : j.at("graphs")) {
    NamedGraph g;
    g.name = entry.at("name").get<std::string>();
    g.graph = graph_from_json(entry);
    g.table = entry.value("table", 0);
    if (entry.contains("treewidth")) g.expected_treewidth = entry.at("treewidth").get<int>();
    if (entry.contains("tau")) g.expected_tau = parse_rational(entry.at("tau").get<std::string>());
    if (entry.contains("rho0")) g.expected_rho0 = parse_rational(entry.at("rho0").get<std::string>());
    if (entry.contains("rho_half")) g.expected_rho_half = parse_rational(entry.at("rho_half").get<std::string>());
    g.name_ambiguous = entry.value("name_ambiguous", false);
    g.slow = entry.value("slow", false);
    g.note = entry.value("note", "");
    out.push_back(std::move(g));
  }
  return out;
}

std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

}  // namespace

const std::vector<NamedGraph>& catalog() {
  static const std::vector<NamedGraph> entries = load();
  return entries;
}

const NamedGraph& named(const std::string& name) {
  for (const auto& g : catalog()) {
    if (g.name == name) return g;
  }
  throw Error(ErrorKind::NotFound, "no catalog graph named '" + name + "'");
}

Graph resolve_graph(const std::string& name) {
  for (const auto& g : catalog()) {
    if (g.name == name) return g.graph;
  }
  std::string_view s = name;
  if (s.starts_with("tree:")) s.remove_prefix(5);
  auto bad = [&name]() { return Error(ErrorKind::NotFound, "unknown graph '" + name + "'"); };
  if (s.starts_with("path")) {
    if (auto n = parse_int(s.substr(4)); n && *n >= 1) return path_graph(*n);
    throw bad();
  }
  if (s.starts_with("C")) {
    if (auto n = parse_int(s.substr(1))) return cycle_graph(*n);
    throw bad();
  }
  if (s.starts_with("K")) {
    s.remove_prefix(1);
    if (auto comma = s.find(','); comma != std::string_view::npos) {
      auto m = parse_int(s.substr(0, comma));
      auto n = parse_int(s.substr(comma + 1));
      if (m && n && *m >= 1 && *n >= 1) return complete_bipartite_graph(*m, *n);
      throw bad();
    }
    if (auto n = parse_int(s); n && *n >= 1) return complete_graph(*n);
  }
  throw bad();
}

}  // namespace margpoly
