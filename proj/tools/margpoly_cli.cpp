#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "margpoly/analysis.hpp"
#include "margpoly/catalog.hpp"
#include "margpoly/error.hpp"
#include "margpoly/inequality_catalog.hpp"
#include "margpoly/marginal_polytopes.hpp"
#include "margpoly/redundancy.hpp"

using namespace margpoly;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitVerification = 3;
constexpr std::size_t kFastEdgeLimit = 8;

struct Options {
  std::string graph_name;
  std::string graph_file;
  std::string format = "text";
  std::string output;
  int threads = 0;
  bool allow_slow = false;
};

struct LoadedGraph {
  std::string id;
  Graph graph;
  const NamedGraph* entry = nullptr;
};

int default_threads() {
  if (const char* env = std::getenv("MARGPOLY_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

LoadedGraph load_graph(const Options& opt) {
  if (opt.graph_name.empty() == opt.graph_file.empty()) {
    throw Error(ErrorKind::InvalidParameter, "give exactly one of --graph or --graph-file");
  }
  LoadedGraph out;
  if (!opt.graph_file.empty()) {
    std::ifstream in(opt.graph_file);
    if (!in) throw Error(ErrorKind::NotFound, "cannot open " + opt.graph_file);
    json j;
    try {
      in >> j;
    } catch (const json::exception& ex) {
      throw Error(ErrorKind::Parse, ex.what());
    }
    out.id = opt.graph_file;
    out.graph = graph_from_json(j);
    return out;
  }
  out.id = opt.graph_name;
  for (const auto& e : catalog()) {
    if (e.name == opt.graph_name) out.entry = &e;
  }
  out.graph = resolve_graph(opt.graph_name);
  return out;
}

void require_fast(const LoadedGraph& g, const Options& opt) {
  if (g.graph.num_edges() > kFastEdgeLimit && !opt.allow_slow) {
    throw Error(ErrorKind::UnsupportedSize,
                g.id + " has " + std::to_string(g.graph.num_edges()) + " edges; exact volumes need --allow-slow");
  }
}

void emit(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw Error(ErrorKind::InvalidParameter, "cannot write " + opt.output);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string decimal(const Rational& r) {
  std::ostringstream s;
  s << std::setprecision(12) << to_double(r);
  return s.str();
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

Edge parse_edge(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::Parse, "edge must be written u,v");
  int u = std::stoi(text.substr(0, comma));
  int v = std::stoi(text.substr(comma + 1));
  if (u > v) std::swap(u, v);
  return {u, v};
}

json rows_json(const LinearSystem& s, const std::vector<std::vector<Family>>* tags) {
  json rows = json::array();
  for (std::size_t i = 0; i < s.inequalities.size(); ++i) {
    json r = to_json(s.inequalities[i]);
    r["text"] = format_row(s.inequalities[i], s.names);
    if (tags) {
      json fam = json::array();
      for (Family f : (*tags)[i]) fam.push_back(to_string(f));
      r["families"] = fam;
    }
    rows.push_back(r);
  }
  return rows;
}

std::string rows_text(const LinearSystem& s, const std::vector<std::vector<Family>>* tags) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.inequalities.size(); ++i) {
    out << "  " << format_row(s.inequalities[i], s.names);
    if (tags) {
      out << "   [";
      for (std::size_t k = 0; k < (*tags)[i].size(); ++k) out << (k ? "," : "") << to_string((*tags)[i][k]);
      out << "]";
    }
    out << '\n';
  }
  return out.str();
}

std::string rows_csv(const std::string& block, const LinearSystem& s, const std::vector<std::vector<Family>>* tags) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.inequalities.size(); ++i) {
    out << block << "," << i << ",\"" << format_row(s.inequalities[i], s.names) << "\",";
    if (tags) {
      for (std::size_t k = 0; k < (*tags)[i].size(); ++k) out << (k ? ";" : "") << to_string((*tags)[i][k]);
    }
    out << '\n';
  }
  return out.str();
}

int cmd_facets(const Options& opt, bool tag_families) {
  const LoadedGraph g = load_graph(opt);
  const LinearSystem cor = cor_hrep(g.graph);
  const LinearSystem tra = tra_hrep(g.graph);
  std::vector<std::vector<Family>> tags;
  if (tag_families) tags = identify_families(g.graph, cor);
  const auto* tp = tag_families ? &tags : nullptr;
  if (opt.format == "json") {
    emit(opt, json{{"graph", g.id},
                   {"names", cor.names},
                   {"cor", rows_json(cor, tp)},
                   {"tra", rows_json(tra, nullptr)}}
                  .dump(2));
  } else if (opt.format == "csv") {
    emit(opt, "block,index,row,families\n" + rows_csv("cor", cor, tp) + rows_csv("tra", tra, nullptr));
  } else {
    std::ostringstream out;
    out << "graph " << g.id << ": " << to_string(g.graph) << "\n";
    out << "correlation polytope, " << cor.inequalities.size() << " facets\n" << rows_text(cor, tp);
    out << "transportation body, " << tra.inequalities.size() << " inequalities\n" << rows_text(tra, nullptr);
    emit(opt, out.str());
  }
  return kExitOk;
}

int cmd_sweep(const Options& opt, const std::string& grid_text) {
  const LoadedGraph g = load_graph(opt);
  require_fast(g, opt);
  const std::vector<Rational> grid = grid_text == "default" ? default_grid() : parse_list(grid_text);
  const auto curve = ratio_curve(g.graph, grid, opt.threads);
  bool degenerate = false;
  for (const auto& pt : curve) degenerate = degenerate || pt.degenerate;
  if (opt.format == "json") {
    json pts = json::array();
    for (const auto& pt : curve) {
      json j = {{"t", to_string(pt.t)}, {"ratio", to_string(pt.ratio)}};
      if (pt.degenerate) j["degenerate"] = true;
      pts.push_back(j);
    }
    emit(opt, json{{"graph", g.id}, {"curve", pts}}.dump(2));
  } else {
    std::ostringstream out;
    out << "t,ratio,ratio_decimal,degenerate\n";
    for (const auto& pt : curve) {
      out << to_string(pt.t) << "," << to_string(pt.ratio) << "," << decimal(pt.ratio) << ","
          << (pt.degenerate ? "true" : "false") << "\n";
    }
    emit(opt, out.str());
  }
  return degenerate ? kExitUsage : kExitOk;
}

int cmd_report(const Options& opt, const std::string& grid_text) {
  const LoadedGraph g = load_graph(opt);
  require_fast(g, opt);
  std::vector<Rational> grid;
  if (grid_text == "default") {
    grid = default_grid();
  } else if (!grid_text.empty()) {
    grid = parse_list(grid_text);
  }
  const RatioReport r = report(g.graph, g.id, grid, opt.threads);
  const int tw = treewidth(g.graph);

  bool mismatch = !r.validated || !r.constant_below_tau;
  json expected = json::object();
  if (g.entry) {
    const NamedGraph& e = *g.entry;
    auto check = [&](const char* key, const std::optional<Rational>& want, const Rational& got) {
      if (!want) return;
      expected[key] = to_string(*want);
      if (*want != got) mismatch = true;
    };
    check("tau", e.expected_tau, r.tau);
    check("rho0", e.expected_rho0, r.rho0);
    check("rho_half", e.expected_rho_half, r.rho_half);
    if (e.expected_treewidth) {
      expected["treewidth"] = *e.expected_treewidth;
      if (*e.expected_treewidth != tw) mismatch = true;
    }
  }

  if (opt.format == "json") {
    json j = to_json(r);
    j["treewidth"] = tw;
    j["expected"] = expected;
    j["matches_expected"] = !mismatch;
    emit(opt, j.dump(2));
  } else if (opt.format == "csv") {
    std::ostringstream out;
    out << "graph,treewidth,tau,rho0,rho_half,validated,matches_expected\n"
        << g.id << "," << tw << "," << to_string(r.tau) << "," << to_string(r.rho0) << "," << to_string(r.rho_half)
        << "," << (r.validated ? "true" : "false") << "," << (mismatch ? "false" : "true") << "\n";
    emit(opt, out.str());
  } else {
    std::ostringstream out;
    out << "graph      " << g.id << "\n"
        << "treewidth  " << tw << "\n"
        << "tau        " << to_string(r.tau) << "\n"
        << "rho0       " << to_string(r.rho0) << "\n"
        << "rho_half   " << to_string(r.rho_half) << "\n"
        << "validated  " << (r.validated ? "yes" : "no") << "\n";
    if (!expected.empty()) out << "expected   " << (mismatch ? "MISMATCH " : "match ") << expected.dump() << "\n";
    for (const auto& b : r.breakpoints) {
      out << "breakpoint t=" << to_string(b.t) << " (" << b.rows.size() << " facets)";
      if (b.cuts) out << (*b.cuts ? " cuts" : " redundant");
      out << "\n";
    }
    for (const auto& pt : r.curve) out << "  " << to_string(pt.t) << "  " << to_string(pt.ratio) << "\n";
    emit(opt, out.str());
  }
  return mismatch ? kExitVerification : kExitOk;
}

int cmd_mc(const Options& opt, const std::string& t_text, const std::string& p_text, std::uint64_t samples,
           std::uint64_t seed, const std::string& oracle_name) {
  const LoadedGraph g = load_graph(opt);
  if (t_text.empty() == p_text.empty()) throw Error(ErrorKind::InvalidParameter, "give exactly one of --t or --p");
  const RationalVector p = t_text.empty() ? parse_list(p_text) : symmetric_marginals(g.graph, parse_rational(t_text));
  McOracle oracle = McOracle::HRep;
  if (oracle_name == "lp") {
    oracle = McOracle::Lp;
  } else if (oracle_name != "hrep") {
    throw Error(ErrorKind::InvalidParameter, "oracle must be hrep or lp");
  }
  if (oracle == McOracle::HRep) require_fast(g, opt);
  const McEstimate m = monte_carlo_ratio(g.graph, p, samples, seed, opt.threads, oracle);
  std::optional<Rational> exact;
  if (g.graph.num_edges() <= kFastEdgeLimit) {
    const RatioResult r = ratio_at(g.graph, p);
    if (!r.degenerate) exact = r.ratio;
  }
  if (opt.format == "json") {
    json j = to_json(m);
    j["graph"] = g.id;
    if (exact) {
      j["exact"] = to_string(*exact);
      j["exact_decimal"] = to_double(*exact);
    }
    emit(opt, j.dump(2));
  } else if (opt.format == "csv") {
    std::ostringstream out;
    out << "graph,samples,hits,estimate,stderr,seed,exact\n"
        << g.id << "," << m.samples << "," << m.hits << "," << std::setprecision(10) << m.estimate << ","
        << m.standard_error << "," << m.seed << "," << (exact ? to_string(*exact) : "") << "\n";
    emit(opt, out.str());
  } else {
    std::ostringstream out;
    out << std::setprecision(6) << "estimate " << m.estimate << " +- " << m.standard_error << " (" << m.hits << "/"
        << m.samples << ", seed " << m.seed << ")\n";
    if (exact) out << "exact    " << to_string(*exact) << " = " << decimal(*exact) << "\n";
    emit(opt, out.str());
  }
  return kExitOk;
}

int cmd_fm(const Options& opt, const std::string& edge_text) {
  const LoadedGraph g = load_graph(opt);
  const Edge e = parse_edge(edge_text);
  const int idx = g.graph.edge_index(e.u, e.v);
  if (idx < 0) throw Error(ErrorKind::NotFound, "edge " + edge_text + " is not in the graph");
  const LinearSystem cor = cor_hrep(g.graph);
  const LinearSystem projected =
      fm_eliminate(cor, static_cast<std::size_t>(g.graph.num_vertices()) + static_cast<std::size_t>(idx));
  const Graph reduced = remove_edge(g.graph, e);
  const LinearSystem direct = cor_hrep(reduced);
  const bool verified = projected.inequality_keys() == direct.inequality_keys();

  if (opt.format == "json") {
    emit(opt, json{{"graph", g.id},
                   {"eliminated", cor.names[static_cast<std::size_t>(g.graph.num_vertices()) + static_cast<std::size_t>(idx)]},
                   {"names", projected.names},
                   {"rows", rows_json(projected, nullptr)},
                   {"verified", verified}}
                  .dump(2));
  } else if (opt.format == "csv") {
    emit(opt, "block,index,row,families\n" + rows_csv("projected", projected, nullptr));
  } else {
    std::ostringstream out;
    out << "eliminated q" << e.u << "_" << e.v << " from " << g.id << ": " << projected.inequalities.size()
        << " irredundant rows\n"
        << rows_text(projected, nullptr)
        << "matches facets of the edge-removed graph: " << (verified ? "yes" : "NO") << "\n";
    emit(opt, out.str());
  }
  return verified ? kExitOk : kExitVerification;
}

int cmd_conjecture(const Options& opt, bool all4, bool all5, bool all) {
  std::vector<LoadedGraph> graphs;
  if (all4 || all5 || all) {
    for (const auto& e : catalog()) {
      const int n = e.graph.num_vertices();
      if (!(all || (all4 && n == 4) || (all5 && n == 5))) continue;
      if (e.slow && !opt.allow_slow) continue;
      graphs.push_back({e.name, e.graph, &e});
    }
  } else {
    graphs.push_back(load_graph(opt));
  }
  bool failed = false;
  json rows = json::array();
  std::ostringstream text;
  std::ostringstream csv;
  csv << "graph,treewidth,tau,conjectured_tau,verdict\n";
  text << std::left << std::setw(12) << "graph" << std::setw(4) << "tw" << std::setw(8) << "tau" << "verdict\n";
  for (const auto& g : graphs) {
    const ConjectureCheck c = check_conjecture(g.graph);
    failed = failed || !c.holds;
    json j = to_json(c);
    j["graph"] = g.id;
    rows.push_back(j);
    text << std::setw(12) << g.id << std::setw(4) << c.treewidth << std::setw(8) << to_string(c.tau)
         << (c.holds ? "holds" : "FAILS") << "\n";
    csv << g.id << "," << c.treewidth << "," << to_string(c.tau) << "," << to_string(c.conjectured_tau) << ","
        << (c.holds ? "holds" : "fails") << "\n";
  }
  if (opt.format == "json") {
    emit(opt, json{{"results", rows}}.dump(2));
  } else if (opt.format == "csv") {
    emit(opt, csv.str());
  } else {
    emit(opt, text.str());
  }
  return failed ? kExitVerification : kExitOk;
}

int cmd_catalog(const Options& opt) {
  json rows = json::array();
  std::ostringstream text;
  for (const auto& e : catalog()) {
    json j = to_json(e.graph);
    j["name"] = e.name;
    j["table"] = e.table;
    if (e.expected_treewidth) j["treewidth"] = *e.expected_treewidth;
    if (e.expected_tau) j["tau"] = to_string(*e.expected_tau);
    if (e.expected_rho0) j["rho0"] = to_string(*e.expected_rho0);
    if (e.expected_rho_half) j["rho_half"] = to_string(*e.expected_rho_half);
    if (e.name_ambiguous) j["name_ambiguous"] = true;
    if (e.slow) j["slow"] = true;
    if (!e.note.empty()) j["note"] = e.note;
    rows.push_back(j);
    text << std::left << std::setw(12) << e.name << to_string(e.graph) << (e.name_ambiguous ? "  (name-ambiguous)" : "")
         << "\n";
  }
  emit(opt, opt.format == "json" ? json{{"graphs", rows}}.dump(2) : text.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact volumes of correlation and transportation polytope slices of small graphs"};
  app.require_subcommand(1);
  Options opt;
  opt.threads = default_threads();

  auto add_common = [&opt](CLI::App* cmd, bool graph) {
    if (graph) {
      cmd->add_option("--graph", opt.graph_name, "catalog name or K<n>, C<n>, path<n>, K<m>,<n>");
      cmd->add_option("--graph-file", opt.graph_file, "JSON file {\"n\": .., \"edges\": [[i,j], ..]}");
    }
    cmd->add_option("--format", opt.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--output", opt.output, "write to a file instead of stdout");
    cmd->add_option("--threads", opt.threads, "worker threads (default from MARGPOLY_THREADS)");
    cmd->add_flag("--allow-slow", opt.allow_slow, "allow exact volumes in more than 8 edge dimensions");
  };

  bool tag_families = false;
  auto* facets = app.add_subcommand("facets", "facets of the correlation polytope and the transportation rows");
  add_common(facets, true);
  facets->add_flag("--tag-families", tag_families, "tag rows with the inequality families that generate them");

  std::string grid = "default";
  auto* sweep = app.add_subcommand("sweep", "exact volume ratio curve of symmetric slices");
  add_common(sweep, true);
  sweep->add_option("--grid", grid, "'default' (k/60) or a comma list of t values");

  std::string report_grid;
  auto* rep = app.add_subcommand("report", "fall-off value, initial and middle ratio");
  add_common(rep, true);
  rep->add_option("--grid", report_grid, "also print the curve on this grid ('default' or a list)");

  std::string t_text;
  std::string p_text;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  std::string oracle = "hrep";
  auto* mc = app.add_subcommand("mc", "Monte-Carlo estimate of the volume ratio");
  add_common(mc, true);
  mc->add_option("--t", t_text, "symmetric marginal");
  mc->add_option("--p", p_text, "comma list of vertex marginals");
  mc->add_option("--samples", samples, "number of samples")->check(CLI::PositiveNumber);
  mc->add_option("--seed", seed, "random seed");
  mc->add_option("--oracle", oracle, "membership test: hrep (default) or lp");

  std::string edge;
  auto* fm = app.add_subcommand("fm", "project out one edge coordinate by Fourier-Motzkin elimination");
  add_common(fm, true);
  fm->add_option("--edge", edge, "edge u,v")->required();

  bool all4 = false;
  bool all5 = false;
  bool all = false;
  auto* conj = app.add_subcommand("conjecture", "compare the fall-off value with 1/(treewidth+1)");
  add_common(conj, true);
  conj->add_flag("--all-4-vertex", all4, "all 4-vertex catalog graphs");
  conj->add_flag("--all-5-vertex", all5, "all 5-vertex catalog graphs");
  conj->add_flag("--all", all, "the whole catalog");

  auto* cat = app.add_subcommand("catalog", "list the named graphs");
  add_common(cat, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*facets) return cmd_facets(opt, tag_families);
    if (*sweep) return cmd_sweep(opt, grid);
    if (*rep) return cmd_report(opt, report_grid);
    if (*mc) return cmd_mc(opt, t_text, p_text, samples, seed, oracle);
    if (*fm) return cmd_fm(opt, edge);
    if (*conj) return cmd_conjecture(opt, all4, all5, all);
    if (*cat) return cmd_catalog(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
