#include <doctest.h>

#include <set>

#include "margpoly/catalog.hpp"
#include "margpoly/error.hpp"
#include "margpoly/inequality_catalog.hpp"
#include "margpoly/marginal_polytopes.hpp"
#include "margpoly/redundancy.hpp"

using namespace margpoly;

namespace {

std::set<RowKey> keys(const std::vector<TaggedInequality>& rows) {
  std::set<RowKey> out;
  for (const auto& r : rows) out.insert(normalize(r.row));
  return out;
}

Row row(std::initializer_list<int> a, int c) {
  Row r;
  for (int x : a) r.a.emplace_back(x);
  r.c = c;
  return r;
}

LinearSystem with_box(const Graph& g, const std::vector<TaggedInequality>& extra) {
  LinearSystem s(coordinate_names(g).size(), coordinate_names(g));
  for (const auto& r : box_inequalities(g)) s.add_inequality(r.row.a, r.row.c);
  for (const auto& r : extra) s.add_inequality(r.row.a, r.row.c);
  return s;
}

}  // namespace

TEST_CASE("odd-cycle inequalities of the triangle") {
  const auto rows = odd_cycle_inequalities(complete_graph(3));
  CHECK(rows.size() == 4);
  // Coordinates p0 p1 p2 q0_1 q0_2 q1_2.
  const std::set<RowKey> expected{
      normalize(row({1, 1, 1, -1, -1, -1}, 1)),
      normalize(row({-1, 0, 0, 1, 1, -1}, 0)),
      normalize(row({0, -1, 0, 1, -1, 1}, 0)),
      normalize(row({0, 0, -1, -1, 1, 1}, 0)),
  };
  CHECK(keys(rows) == expected);
  for (const auto& r : rows) {
    if (r.meta.odd_edges == std::vector<Edge>{{0, 1}}) CHECK(normalize(r.row) == normalize(row({0, 0, -1, -1, 1, 1}, 0)));
  }
}

TEST_CASE("odd-cycle bookkeeping") {
  for (const Graph& g : {cycle_graph(5), named("house").graph, complete_graph(4)}) {
    for (const auto& r : odd_cycle_inequalities(g)) {
      int s0 = 0, s2 = 0;
      for (int v = 0; v < g.num_vertices(); ++v) {
        s0 += r.row.a[v] == 1;
        s2 += r.row.a[v] == -1;
      }
      const int m = static_cast<int>(r.meta.odd_edges.size());
      CHECK(s0 - s2 == m - (static_cast<int>(r.meta.cycle.size()) - m));
    }
  }
  CHECK(simple_cycles(complete_graph(4)).size() == 7);
  for (int n = 3; n <= 7; ++n) CHECK(odd_cycle_inequalities(cycle_graph(n)).size() == (std::size_t{1} << (n - 1)));
}

TEST_CASE("m-negative inequalities") {
  for (int n = 3; n <= 7; ++n) {
    const auto rows = m_negative_inequalities(n);
    CHECK(rows.size() == (std::size_t{1} << (n - 1)));
    CHECK(keys(rows) == keys(odd_cycle_inequalities(cycle_graph(n))));
    for (const auto& r : rows) {
      const int m = static_cast<int>(r.meta.negative_edges.size());
      const ActivationThreshold a = activation_threshold(r);
      if (m == 1) {
        CHECK(a.kind == ActivationThreshold::Kind::TIndependent);
      } else {
        CHECK(a.kind == ActivationThreshold::Kind::Active);
        CHECK(a.t == Rational(m - 1, 2 * m));
      }
    }
  }
  CHECK_THROWS_AS(m_negative_inequalities(2), Error);
}

TEST_CASE("inclusion-exclusion inequalities") {
  const auto k3 = keys(inclusion_exclusion_inequalities(3));
  CHECK(k3.count(normalize(row({1, 1, 1, -1, -1, -1}, 1))));
  CHECK(k3.count(normalize(row({0, 0, -1, -1, 1, 1}, 0))));

  for (int n = 3; n <= 6; ++n) {
    Rational smallest = 1;
    for (const auto& r : inclusion_exclusion_inequalities(n)) {
      const ActivationThreshold a = activation_threshold(r);
      if (a.kind == ActivationThreshold::Kind::Active) smallest = std::min(smallest, a.t);
      if (r.meta.lower_bound || static_cast<int>(r.meta.events.size()) != n) continue;
      const int k = static_cast<int>(r.meta.complemented.size());
      if (k == 1 || k == 2) {
        CHECK(a.kind == ActivationThreshold::Kind::TIndependent);
      } else {
        REQUIRE(a.kind == ActivationThreshold::Kind::Active);
        CHECK(a.t == Rational(-(k - 1) * (k - 2)) / (2 * (3 * k - k * k - n)));
      }
    }
    CHECK(smallest == Rational(1, n));
  }
}

TEST_CASE("activation thresholds") {
  // p0..p3 then six edges of K4.
  CHECK(activation_threshold(row({1, 1, 1, 1, -1, -1, -1, -1, -1, -1}, 1), 4).t == Rational(1, 4));
  CHECK(activation_threshold(row({2, 2, 2, 2, -1, -1, -1, -1, -1, -1}, 3), 4).t == Rational(3, 8));
  CHECK(activation_threshold(row({0, 0, 0, 0, 1, 0, 0, 0, 0, 0}, 1), 4).beyond_half);
  CHECK(activation_threshold(row({-1, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 1), 4).kind == ActivationThreshold::Kind::NeverActive);
  CHECK(activation_threshold(row({-1, 0, 0, 0, 1, 0, 0, 0, 0, 0}, 0), 4).kind == ActivationThreshold::Kind::TIndependent);
  CHECK_THROWS_AS(activation_threshold(row({1, 0, 0, 0, 0, 0, 0, 0, 0, 0}, -1), 4), Error);
  CHECK_THROWS_AS(activation_threshold(row({1, 0}, 1), 4), Error);

  std::set<Rational> groups;
  for (const auto& r : cor_hrep(complete_graph(4)).inequalities) {
    const ActivationThreshold a = activation_threshold(r, 4);
    if (a.kind == ActivationThreshold::Kind::Active && !a.beyond_half) groups.insert(a.t);
  }
  CHECK(groups == std::set<Rational>{Rational(1, 4), Rational(1, 3), Rational(3, 8), Rational(1, 2)});
}

TEST_CASE("generated inequalities are valid") {
  for (const auto& entry : catalog()) {
    const Graph& g = entry.graph;
    const PointList v = cor_vertices(g);
    for (const auto& r : odd_cycle_inequalities(g)) {
      for (const auto& pt : v.points) CHECK(dot(r.row.a, pt) <= r.row.c);
    }
  }
  for (int n = 3; n <= 5; ++n) {
    const PointList v = cor_vertices(complete_graph(n));
    for (const auto& r : inclusion_exclusion_inequalities(n)) {
      for (const auto& pt : v.points) CHECK(dot(r.row.a, pt) <= r.row.c);
    }
  }
}

TEST_CASE("facet families") {
  for (const Graph& g : {cycle_graph(3), cycle_graph(4), cycle_graph(5), named("K4-e").graph, named("house").graph,
                         named("butterfly").graph}) {
    CHECK_MESSAGE(remove_redundant(with_box(g, odd_cycle_inequalities(g))).inequality_keys() ==
                      cor_hrep(g).inequality_keys(),
                  to_string(g));
  }
  const Graph k4 = complete_graph(4);
  CHECK(remove_redundant(with_box(k4, inclusion_exclusion_inequalities(4))).inequality_keys() ==
        cor_hrep(k4).inequality_keys());

  for (const auto& families : identify_families(k4, cor_hrep(k4))) CHECK_FALSE(families.empty());
  bool saw_m_negative = false;
  for (const auto& families : identify_families(cycle_graph(5), cor_hrep(cycle_graph(5)))) {
    CHECK_FALSE(families.empty());
    for (Family f : families) saw_m_negative |= f == Family::MNegative;
  }
  CHECK(saw_m_negative);
}
