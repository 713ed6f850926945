// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance [--allow-slow]
//
// --allow-slow adds the two 5-vertex entries whose exact volumes live in 9 and
// 10 edge dimensions.

#include <chrono>
#include <cmath>
#include <cstring>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "margpoly/analysis.hpp"
#include "margpoly/catalog.hpp"
#include "margpoly/closed_forms.hpp"
#include "margpoly/inequality_catalog.hpp"
#include "margpoly/marginal_polytopes.hpp"
#include "margpoly/redundancy.hpp"
#include "margpoly/volume.hpp"

using namespace margpoly;

namespace {

// Wall-clock limits in seconds.
constexpr double kVolumeLimit = 10;
constexpr double kK3CurveLimit = 5;
constexpr double kSkewedLimit = 5;
constexpr double kK22Limit = 30;
constexpr double kK4Limit = 120;
constexpr double kTable4Limit = 30 * 60;
constexpr double kCycleLimit = 10 * 60;
constexpr double kFmLimit = 10;
constexpr double kMonteCarloLimit = 60;

constexpr std::uint64_t kMonteCarloSamples = 100000;
constexpr std::uint64_t kMonteCarloSeed = 7;
constexpr double kMonteCarloSigmas = 4;
constexpr int kRandomBoxesPerTree = 200;

Rational R(const char* s) { return parse_rational(s); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

struct Params {
  Rational tau;
  Rational rho0;
  Rational rho_half;
  int treewidth = 0;
};

std::map<std::string, Params> computed;

const Params& params_of(const NamedGraph& entry) {
  auto it = computed.find(entry.name);
  if (it != computed.end()) return it->second;
  const RatioReport r = report(entry.graph, entry.name);
  return computed[entry.name] = {r.tau, r.rho0, r.rho_half, treewidth(entry.graph)};
}

void check_entry(Outcome& o, const NamedGraph& entry) {
  const Params& p = params_of(entry);
  const bool ok = p.tau == *entry.expected_tau && p.rho0 == *entry.expected_rho0 &&
                  p.rho_half == *entry.expected_rho_half && p.treewidth == *entry.expected_treewidth;
  o.require(ok, entry.name + " gave (" + to_string(p.tau) + ", " + to_string(p.rho0) + ", " +
                    to_string(p.rho_half) + ", tw " + std::to_string(p.treewidth) + ")");
}

int failures = 0;

void run(int id, const char* title, double limit, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit > 0) {
    std::ostringstream bound;
    bound << "time " << seconds << " s over " << limit << " s";
    o.require(seconds <= limit, bound.str());
  }
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << "  " << (id < 10 ? " " : "") << id << "  " << title << " ("
            << std::fixed << std::setprecision(2) << seconds << " s)" << o.detail.str() << std::endl;
}

Row named_row(const LinearSystem& s, std::initializer_list<std::pair<const char*, int>> terms, int c) {
  Row r{RationalVector(s.dim), c};
  for (const auto& [name, coef] : terms) r.a[s.coordinate(name)] = coef;
  return r;
}

LinearSystem with_box(const Graph& g, const std::vector<TaggedInequality>& extra) {
  const auto names = coordinate_names(g);
  LinearSystem s(names.size(), names);
  for (const auto& r : box_inequalities(g)) s.add_inequality(r.row.a, r.row.c);
  for (const auto& r : extra) s.add_inequality(r.row.a, r.row.c);
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  bool allow_slow = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--allow-slow") == 0) {
      allow_slow = true;
    } else {
      std::cerr << "usage: acceptance [--allow-slow]\n";
      return 2;
    }
  }

  run(1, "unsliced volumes of K3 and K22", 4 * kVolumeLimit, [](Outcome& o) {
    const Graph k3 = complete_graph(3);
    const Graph k22 = resolve_graph("K22");
    o.require(volume(tra_hrep(k3)).volume == R("1/120"), "vol TRA(K3)");
    o.require(volume(cor_vertices(k3)).volume == R("1/180"), "vol COR(K3)");
    o.require(volume(cor_vertices(k22)).volume == R("1/630"), "vol COR(K22)");
    const Rational tra = volume(tra_hrep(k22)).volume;
    // 17/10800 is inconsistent with vol COR(K22) = (16/17) vol TRA(K22) = 1/630.
    o.require(tra == R("17/10080"), "vol TRA(K22) = " + to_string(tra));
    o.require(R("16/17") * tra == R("1/630"), "vol COR(K22) / vol TRA(K22) = 16/17");
    o.detail << " vol TRA(K22) = 17/10080";
  });

  run(2, "K3 symmetric curve", kK3CurveLimit, [](Outcome& o) {
    for (const char* t : {"1/5", "1/3", "2/5", "1/2", "3/5"}) {
      o.require(symmetric_ratio(complete_graph(3), R(t)).ratio == k3_symmetric_ratio(R(t)), std::string("t=") + t);
    }
  });

  run(3, "K3 skewed curve", kSkewedLimit, [](Outcome& o) {
    for (const char* t : {"1/8", "1/5", "1/4", "1/3"}) {
      const Rational x = R(t);
      o.require(ratio_at(complete_graph(3), {x, x, R("1/2") - x}).ratio == k3_skewed_ratio(x), std::string("t=") + t);
    }
  });

  run(4, "K22 parameters (1/3, 5/6, 2/3)", kK22Limit, [](Outcome& o) {
    const RatioReport r = report(resolve_graph("K22"), "K22");
    o.require(r.tau == R("1/3") && r.rho0 == R("5/6") && r.rho_half == R("2/3") && r.validated, "parameters");
  });

  run(5, "K4 parameters (1/4, 5/36, 2/45)", kK4Limit, [](Outcome& o) {
    const RatioReport r = report(complete_graph(4), "K4");
    o.require(r.tau == R("1/4") && r.rho0 == R("5/36") && r.rho_half == R("2/45") && r.validated, "parameters");
  });

  run(6, "4-vertex table regression", 0, [](Outcome& o) {
    int rows = 0;
    for (const auto& entry : catalog()) {
      if (entry.table != 3) continue;
      check_entry(o, entry);
      ++rows;
    }
    o.require(rows == 4, "expected four rows");
    o.detail << " " << rows << " rows";
  });

  run(7, "5-vertex table regression", allow_slow ? 0 : kTable4Limit, [&](Outcome& o) {
    int rows = 0, skipped = 0;
    for (const auto& entry : catalog()) {
      if (entry.table != 4) continue;
      if (entry.slow && !allow_slow) {
        ++skipped;
        continue;
      }
      check_entry(o, entry);
      ++rows;
    }
    o.detail << " " << rows << " rows";
    if (skipped) o.detail << ", " << skipped << " slow rows skipped (use --allow-slow)";
  });

  run(8, "cycle formula oracle", kCycleLimit, [](Outcome& o) {
    for (int n = 3; n <= 6; ++n) {
      for (const char* t : {"1/4", "3/8", "5/12", "1/2"}) {
        o.require(symmetric_ratio(cycle_graph(n), R(t)).ratio == cn_ratio(n, R(t)),
                  "C" + std::to_string(n) + " at " + t);
      }
    }
  });

  run(9, "Fourier-Motzkin reproduction of the 4-cycle facets", kFmLimit, [](Outcome& o) {
    const Graph g = named("K4-e").graph;
    const LinearSystem s = fm_eliminate(cor_hrep(g), "q0_2");
    std::set<RowKey> expected;
    for (const auto& b : box_inequalities(remove_edge(g, {0, 2}))) expected.insert(normalize(b.row));
    for (const Row& r : {
             named_row(s, {{"p0", 1}, {"p3", 1}, {"q0_3", -1}, {"q2_3", -1}, {"q0_1", -1}, {"q1_2", 1}}, 1),
             named_row(s, {{"p0", -1}, {"p3", -1}, {"q0_3", 1}, {"q2_3", 1}, {"q0_1", 1}, {"q1_2", -1}}, 0),
             named_row(s, {{"p2", 1}, {"p3", 1}, {"q0_3", -1}, {"q2_3", -1}, {"q0_1", 1}, {"q1_2", -1}}, 1),
             named_row(s, {{"p2", -1}, {"p3", -1}, {"q0_3", 1}, {"q2_3", 1}, {"q0_1", -1}, {"q1_2", 1}}, 0),
             named_row(s, {{"p0", 1}, {"p1", 1}, {"q0_3", -1}, {"q2_3", 1}, {"q0_1", -1}, {"q1_2", -1}}, 1),
             named_row(s, {{"p0", -1}, {"p1", -1}, {"q0_3", 1}, {"q2_3", -1}, {"q0_1", 1}, {"q1_2", 1}}, 0),
             named_row(s, {{"p1", 1}, {"p2", 1}, {"q0_3", 1}, {"q2_3", -1}, {"q0_1", -1}, {"q1_2", -1}}, 1),
             named_row(s, {{"p1", -1}, {"p2", -1}, {"q0_3", -1}, {"q2_3", 1}, {"q0_1", 1}, {"q1_2", 1}}, 0),
         }) {
      expected.insert(normalize(r));
    }
    o.require(s.inequality_keys() == expected, "row set");
    o.detail << " " << s.inequalities.size() << " rows";
  });

  run(10, "facet-family completeness", 0, [](Outcome& o) {
    for (const Graph& g : {cycle_graph(3), cycle_graph(4), cycle_graph(5), named("K4-e").graph, named("house").graph,
                           named("butterfly").graph}) {
      o.require(remove_redundant(with_box(g, odd_cycle_inequalities(g))).inequality_keys() ==
                    cor_hrep(g).inequality_keys(),
                "odd-cycle for " + to_string(g));
    }
    const Graph k4 = complete_graph(4);
    o.require(remove_redundant(with_box(k4, inclusion_exclusion_inequalities(4))).inequality_keys() ==
                  cor_hrep(k4).inequality_keys(),
              "inclusion-exclusion for K4");
  });

  run(11, "fall-off equals 1/(treewidth+1)", 0, [&](Outcome& o) {
    int checked = 0;
    for (const auto& entry : catalog()) {
      if (entry.slow && !allow_slow) continue;
      const Params& p = params_of(entry);
      o.require(p.tau == Rational(1, p.treewidth + 1), entry.name);
      ++checked;
    }
    o.detail << " " << checked << " graphs";
  });

  run(12, "gluing laws", 0, [](Outcome& o) {
    const Graph k3 = complete_graph(3);
    const Graph k22 = resolve_graph("K22");
    for (const auto& [t, expected] : {std::pair{R("1/4"), R("5/12")}, std::pair{R("1/2"), R("2/9")}}) {
      const GlueReport g = check_glue_laws(k3, k22, 0, 0, t);
      o.require(g.product_law && g.ratio_glued == expected, "K3 + K22 at t=" + to_string(t));
    }
    for (const char* t : {"1/4", "2/5", "1/2"}) {
      const GlueReport g = check_glue_laws(k3, path_graph(3), 0, 0, R(t));
      o.require(g.tree_invariance == true, std::string("K3 + path3 at t=") + t);
    }
  });

  run(13, "Monte Carlo consistency", 3 * kMonteCarloLimit, [](Outcome& o) {
    const std::vector<std::pair<const char*, const char*>> cases{{"K3", "1/2"}, {"K22", "1/2"}, {"K22", "1/4"}};
    for (const auto& [name, t] : cases) {
      const auto start = std::chrono::steady_clock::now();
      const Graph g = resolve_graph(name);
      const McEstimate m = monte_carlo_ratio(g, symmetric_marginals(g, R(t)), kMonteCarloSamples, kMonteCarloSeed);
      const double exact = to_double(symmetric_ratio(g, R(t)).ratio);
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      o.require(std::abs(m.estimate - exact) <= kMonteCarloSigmas * m.standard_error,
                std::string(name) + " at t=" + t);
      o.require(seconds <= kMonteCarloLimit, std::string(name) + " time");
    }
  });

  run(14, "compatibility oracle", 0, [](Outcome& o) {
    const RationalVector half(3, R("1/2"));
    o.require(!is_compatible(complete_graph(3), half, {0, 0, 0}), "frustrated triangle");
    std::mt19937_64 rng(14);
    auto fraction = [&](int max_den) {
      const int den = std::uniform_int_distribution<int>(2, max_den)(rng);
      return Rational(std::uniform_int_distribution<int>(1, den - 1)(rng), den);
    };
    for (const auto& entry : catalog()) {
      RationalVector p;
      for (int v = 0; v < entry.graph.num_vertices(); ++v) p.push_back(fraction(20));
      RationalVector q;
      for (const auto& e : entry.graph.edges()) q.push_back(p[e.u] * p[e.v]);
      o.require(is_compatible(entry.graph, p, q), "independent point on " + entry.name);
    }
    int boxes = 0;
    for (const Graph& tree : {path_graph(3), path_graph(4), path_graph(5), Graph(4, {{0, 1}, {0, 2}, {0, 3}}),
                              Graph(5, {{0, 1}, {0, 2}, {2, 3}, {2, 4}})}) {
      for (int i = 0; i < kRandomBoxesPerTree; ++i) {
        RationalVector p;
        for (int v = 0; v < tree.num_vertices(); ++v) p.push_back(fraction(20));
        auto [lo, hi] = n_slice_box(tree, p);
        RationalVector q;
        for (std::size_t e = 0; e < lo.size(); ++e) q.push_back(lo[e] + (hi[e] - lo[e]) * fraction(16));
        o.require(is_compatible(tree, p, q), "random box point on " + to_string(tree));
        ++boxes;
      }
    }
    o.detail << " " << boxes << " tree samples";
  });

  return failures == 0 ? 0 : 1;
}
