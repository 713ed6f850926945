#include "margpoly/inequality_catalog.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "margpoly/error.hpp"
#include "margpoly/marginal_polytopes.hpp"

namespace margpoly {

const char* to_string(Family f) {
  switch (f) {
    case Family::Box: return "box";
    case Family::OddCycle: return "odd_cycle";
    case Family::MNegative: return "m_negative";
    case Family::InclusionExclusion: return "inclusion_exclusion";
  }
  return "unknown";
}

namespace {

std::size_t dimension(const Graph& g) { return static_cast<std::size_t>(g.num_vertices()) + g.num_edges(); }

std::size_t q_index(const Graph& g, int a, int b) {
  const int e = g.edge_index(a, b);
  if (e < 0) throw Error(ErrorKind::NotFound, "edge is not in the graph");
  return static_cast<std::size_t>(g.num_vertices()) + static_cast<std::size_t>(e);
}

}  // namespace

std::vector<TaggedInequality> box_inequalities(const Graph& g) {
  std::vector<TaggedInequality> out;
  const LinearSystem tra = tra_hrep(g);
  const std::size_t edge_rows = 4 * g.num_edges();
  for (std::size_t i = 0; i < edge_rows; ++i) {
    out.push_back({tra.inequalities[i], Family::Box, g.num_vertices(), {}});
  }
  return out;
}

std::vector<std::vector<int>> simple_cycles(const Graph& g) {
  std::vector<std::vector<int>> cycles;
  const int n = g.num_vertices();
  std::vector<int> path;
  std::vector<bool> on_path(static_cast<std::size_t>(n), false);
  std::function<void(int, int)> extend = [&](int start, int v) {
    for (int w : g.neighbors(v)) {
      if (w == start && path.size() >= 3 && path[1] < path.back()) cycles.push_back(path);
      if (w <= start || on_path[static_cast<std::size_t>(w)]) continue;
      on_path[static_cast<std::size_t>(w)] = true;
      path.push_back(w);
      extend(start, w);
      path.pop_back();
      on_path[static_cast<std::size_t>(w)] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    on_path[static_cast<std::size_t>(s)] = true;
    extend(s, s);
    on_path[static_cast<std::size_t>(s)] = false;
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

std::vector<TaggedInequality> odd_cycle_inequalities(const Graph& g) {
  std::vector<TaggedInequality> out;
  const std::size_t d = dimension(g);
  for (const auto& cycle : simple_cycles(g)) {
    const std::size_t k = cycle.size();
    // Edge i joins cycle[i] and cycle[i+1].
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
      const int m = std::popcount(mask);
      if (m % 2 == 0) continue;
      TaggedInequality ineq;
      ineq.family = Family::OddCycle;
      ineq.num_vertices = g.num_vertices();
      ineq.meta.cycle = cycle;
      ineq.row.a.assign(d, Rational(0));
      ineq.row.c = m / 2;
      for (std::size_t i = 0; i < k; ++i) {
        const int a = cycle[i];
        const int b = cycle[(i + 1) % k];
        const bool in_m = (mask >> i) & 1;
        ineq.row.a[q_index(g, a, b)] = in_m ? -1 : 1;
        if (in_m) ineq.meta.odd_edges.push_back({std::min(a, b), std::max(a, b)});
        // Vertex cycle[i+1] sits between edges i and i+1.
        const bool next_in_m = (mask >> ((i + 1) % k)) & 1;
        const std::size_t v = static_cast<std::size_t>(b);
        if (in_m && next_in_m) ineq.row.a[v] = 1;
        if (!in_m && !next_in_m) ineq.row.a[v] = -1;
      }
      std::sort(ineq.meta.odd_edges.begin(), ineq.meta.odd_edges.end());
      out.push_back(std::move(ineq));
    }
  }
  return out;
}

std::vector<TaggedInequality> m_negative_inequalities(int n) {
  if (n < 3) throw Error(ErrorKind::InvalidParameter, "m-negative inequalities need n >= 3");
  const Graph g = cycle_graph(n);
  const std::size_t d = dimension(g);
  std::vector<TaggedInequality> out;
  for (int m = 1; m <= n; m += 2) {
    // Enumerate m-subsets of cycle positions in lexicographic order.
    std::vector<int> choice(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) choice[static_cast<std::size_t>(i)] = i;
    for (;;) {
      std::vector<int> gamma(static_cast<std::size_t>(n), 1);
      for (int i : choice) gamma[static_cast<std::size_t>(i)] = -1;
      TaggedInequality ineq;
      ineq.family = Family::MNegative;
      ineq.num_vertices = n;
      ineq.meta.negative_edges = choice;
      ineq.row.a.assign(d, Rational(0));
      int gamma_sum = 0;
      for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        const int gi = gamma[static_cast<std::size_t>(i)];
        ineq.row.a[q_index(g, i, j)] += 4 * gi;
        ineq.row.a[static_cast<std::size_t>(i)] -= 2 * gi;
        ineq.row.a[static_cast<std::size_t>(j)] -= 2 * gi;
        gamma_sum += gi;
      }
      ineq.row.c = n - 2 - gamma_sum;
      out.push_back(std::move(ineq));

      int pos = m - 1;
      while (pos >= 0 && choice[static_cast<std::size_t>(pos)] == n - m + pos) --pos;
      if (pos < 0) break;
      ++choice[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < m; ++i) choice[static_cast<std::size_t>(i)] = choice[static_cast<std::size_t>(i - 1)] + 1;
    }
  }
  return out;
}

std::vector<TaggedInequality> inclusion_exclusion_inequalities(int n) {
  if (n < 2) throw Error(ErrorKind::InvalidParameter, "inclusion-exclusion inequalities need n >= 2");
  const Graph g = complete_graph(n);
  const std::size_t d = dimension(g);
  std::vector<TaggedInequality> out;
  std::set<RowKey> seen;
  for (std::uint32_t events = 1; events < (1u << n); ++events) {
    for (std::uint32_t comp = events;; comp = (comp - 1) & events) {
      // sum_i P(B_i) - sum_{i<j} P(B_i B_j) as constant + a . (p, q).
      RationalVector a(d);
      Rational constant = 0;
      std::vector<int> members;
      for (int i = 0; i < n; ++i) {
        if (!((events >> i) & 1)) continue;
        members.push_back(i);
        const bool ci = (comp >> i) & 1;
        if (ci) {
          constant += 1;
          a[static_cast<std::size_t>(i)] -= 1;
        } else {
          a[static_cast<std::size_t>(i)] += 1;
        }
      }
      for (std::size_t x = 0; x < members.size(); ++x) {
        for (std::size_t y = x + 1; y < members.size(); ++y) {
          const int i = members[x];
          const int j = members[y];
          const bool ci = (comp >> i) & 1;
          const bool cj = (comp >> j) & 1;
          const std::size_t q = q_index(g, i, j);
          const std::size_t pi = static_cast<std::size_t>(i);
          const std::size_t pj = static_cast<std::size_t>(j);
          if (!ci && !cj) {
            a[q] -= 1;
          } else if (!ci && cj) {
            a[pi] -= 1;
            a[q] += 1;
          } else if (ci && !cj) {
            a[pj] -= 1;
            a[q] += 1;
          } else {
            constant -= 1;
            a[pi] += 1;
            a[pj] += 1;
            a[q] -= 1;
          }
        }
      }
      std::vector<int> complemented;
      for (int i : members) {
        if ((comp >> i) & 1) complemented.push_back(i);
      }
      auto emit = [&](Row row, bool lower) {
        if (std::all_of(row.a.begin(), row.a.end(), [](const Rational& x) { return x == 0; })) return;
        if (!seen.insert(normalize(row)).second) return;
        TaggedInequality ineq;
        ineq.row = std::move(row);
        ineq.family = Family::InclusionExclusion;
        ineq.num_vertices = n;
        ineq.meta.events = members;
        ineq.meta.complemented = complemented;
        ineq.meta.lower_bound = lower;
        out.push_back(std::move(ineq));
      };
      emit(Row{a, 1 - constant}, false);
      if (members.size() <= 3) {
        RationalVector neg(d);
        for (std::size_t k = 0; k < d; ++k) neg[k] = -a[k];
        emit(Row{neg, constant}, true);
      }
      if (comp == 0) break;
    }
  }
  return out;
}

ActivationThreshold activation_threshold(const Row& row, int num_vertices) {
  const std::size_t n = static_cast<std::size_t>(num_vertices);
  if (num_vertices < 0 || row.a.size() < n) throw Error(ErrorKind::Invalid, "row shorter than the vertex block");
  if (row.c < 0) throw Error(ErrorKind::Invalid, "row constant is negative");
  ActivationThreshold out;
  if (row.c == 0) return out;
  Rational den = 0;
  for (std::size_t i = 0; i < n; ++i) den += row.a[i];
  for (std::size_t e = n; e < row.a.size(); ++e) {
    if (row.a[e] > 0) den += row.a[e];
  }
  if (den <= 0) {
    out.kind = ActivationThreshold::Kind::NeverActive;
    return out;
  }
  out.kind = ActivationThreshold::Kind::Active;
  out.t = row.c / den;
  out.beyond_half = out.t > Rational(1, 2);
  return out;
}

ActivationThreshold activation_threshold(const TaggedInequality& ineq) {
  return activation_threshold(ineq.row, ineq.num_vertices);
}

std::string to_string(const ActivationThreshold& a) {
  switch (a.kind) {
    case ActivationThreshold::Kind::TIndependent: return "none";
    case ActivationThreshold::Kind::NeverActive: return "never-active";
    case ActivationThreshold::Kind::Active: return to_string(a.t);
  }
  return "unknown";
}

std::vector<std::vector<Family>> identify_families(const Graph& g, const LinearSystem& system) {
  std::map<RowKey, std::set<Family>> known;
  for (const auto& ineq : box_inequalities(g)) known[normalize(ineq.row)].insert(Family::Box);
  for (const auto& ineq : odd_cycle_inequalities(g)) known[normalize(ineq.row)].insert(Family::OddCycle);

  const int n = g.num_vertices();
  if (n >= 2 && n <= 8) {
    const Graph kn = complete_graph(n);
    const std::size_t nv = static_cast<std::size_t>(n);
    for (const auto& ineq : inclusion_exclusion_inequalities(n)) {
      RationalVector a(ineq.row.a.begin(), ineq.row.a.begin() + static_cast<std::ptrdiff_t>(nv));
      a.resize(dimension(g));
      bool fits = true;
      for (std::size_t e = 0; e < kn.num_edges() && fits; ++e) {
        const Rational& x = ineq.row.a[nv + e];
        if (x == 0) continue;
        const int idx = g.edge_index(kn.edges()[e].u, kn.edges()[e].v);
        if (idx < 0) {
          fits = false;
        } else {
          a[nv + static_cast<std::size_t>(idx)] = x;
        }
      }
      if (fits) known[normalize(Row{a, ineq.row.c})].insert(Family::InclusionExclusion);
    }
  }
  if (g.num_edges() == static_cast<std::size_t>(n) && n >= 3 && g == cycle_graph(n)) {
    for (const auto& ineq : m_negative_inequalities(n)) known[normalize(ineq.row)].insert(Family::MNegative);
  }

  std::vector<std::vector<Family>> out;
  for (const auto& row : system.inequalities) {
    auto it = known.find(normalize(row));
    out.emplace_back();
    if (it != known.end()) out.back().assign(it->second.begin(), it->second.end());
  }
  return out;
}

nlohmann::json to_json(const TaggedInequality& ineq, const std::vector<std::string>& names) {
  nlohmann::json j = to_json(ineq.row);
  j["family"] = to_string(ineq.family);
  j["text"] = format_row(ineq.row, names);
  j["activation"] = to_string(activation_threshold(ineq));
  nlohmann::json meta = nlohmann::json::object();
  if (!ineq.meta.cycle.empty()) meta["cycle"] = ineq.meta.cycle;
  if (!ineq.meta.odd_edges.empty()) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : ineq.meta.odd_edges) edges.push_back({e.u, e.v});
    meta["odd_edges"] = edges;
  }
  if (ineq.family == Family::MNegative) {
    meta["negative_positions"] = ineq.meta.negative_edges;
    meta["m"] = ineq.meta.negative_edges.size();
  }
  if (ineq.family == Family::InclusionExclusion) {
    meta["events"] = ineq.meta.events;
    meta["complemented"] = ineq.meta.complemented;
    meta["bound"] = ineq.meta.lower_bound ? "lower" : "upper";
  }
  j["meta"] = meta;
  return j;
}

}  // namespace margpoly
