#include <doctest.h>

#include <algorithm>

#include "margpoly/double_description.hpp"
#include "margpoly/error.hpp"
#include "margpoly/lp.hpp"
#include "margpoly/redundancy.hpp"
#include "margpoly/volume.hpp"

using namespace margpoly;

namespace {

Rational R(const char* s) { return parse_rational(s); }

RationalVector vec(std::initializer_list<int> xs) {
  RationalVector v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

std::vector<RationalVector> cube_points(std::size_t d) {
  std::vector<RationalVector> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    RationalVector p(d);
    for (std::size_t j = 0; j < d; ++j) p[j] = (mask >> j) & 1;
    pts.push_back(p);
  }
  return pts;
}

// {x in [0,1]^d : lo <= sum x <= hi}
LinearSystem sum_slab(std::size_t d, int lo, int hi) {
  LinearSystem s = box_system(RationalVector(d, 0), RationalVector(d, 1));
  s.add_inequality(RationalVector(d, 1), hi);
  s.add_inequality(RationalVector(d, -1), -lo);
  return s;
}

// Eulerian number A(d, k): permutations of d with k descents.
Integer eulerian(unsigned d, unsigned k) {
  Integer s = 0;
  for (unsigned j = 0; j <= k + 1; ++j) {
    Integer term = binomial(d + 1, j) * Integer(pow(Rational(k + 1 - j), d));
    s += (j % 2 == 0) ? term : Integer(-term);
  }
  return s;
}

}  // namespace

TEST_CASE("lp optimum, infeasibility and unboundedness") {
  LinearSystem s(2);
  s.add_inequality(vec({1, 1}), 4);
  s.add_inequality(vec({1, 3}), 6);
  s.add_inequality(vec({-1, 0}), 0);
  s.add_inequality(vec({0, -1}), 0);
  LpResult r = lp(s, vec({1, 2}), Sense::Maximize);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == 5);
  CHECK(s.contains(r.witness));
  CHECK(dot(vec({1, 2}), r.witness) == 5);

  LinearSystem bad(1);
  bad.add_inequality(vec({1}), 0);
  bad.add_inequality(vec({-1}), -1);
  CHECK(lp(bad, vec({0}), Sense::Minimize).status == LpStatus::Infeasible);

  LinearSystem ray(1);
  ray.add_inequality(vec({-1}), 0);
  CHECK(lp(ray, vec({1}), Sense::Maximize).status == LpStatus::Unbounded);
  CHECK(lp(ray, vec({1}), Sense::Minimize).value == 0);
}

TEST_CASE("lp with equalities and degenerate vertices") {
  LinearSystem s = box_system(RationalVector(3, 0), RationalVector(3, 1));
  s.add_equality(vec({1, 1, 1}), R("3/2"));
  s.add_inequality(vec({1, 1, 0}), 1);
  LpResult r = lp(s, vec({0, 0, 1}), Sense::Minimize);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.value == R("1/2"));
}

TEST_CASE("remove_redundant keeps the minimal subsystem") {
  LinearSystem s(1);
  s.add_inequality(vec({1}), 1);
  s.add_inequality(vec({1}), 2);
  s.add_inequality(vec({-1}), 0);
  LinearSystem r = remove_redundant(s);
  REQUIRE(r.inequalities.size() == 2);
  CHECK(r.inequalities[0].c == 1);
  CHECK(r.inequalities[1].a[0] == -1);

  LinearSystem dup = box_system(RationalVector(2, 0), RationalVector(2, 1));
  dup.add_inequality(vec({2, 0}), 2);
  dup.add_inequality(vec({1, 1}), 2);
  CHECK(remove_redundant(dup).inequalities.size() == 4);

  LinearSystem empty(1);
  empty.add_inequality(vec({1}), 0);
  empty.add_inequality(vec({-1}), -1);
  CHECK_THROWS_AS(remove_redundant(empty), Error);
}

TEST_CASE("fm_eliminate projects a square to an interval") {
  LinearSystem s = box_system(RationalVector(2, 0), RationalVector(2, 1));
  LinearSystem p = fm_eliminate(s, 1);
  CHECK(p.dim == 1);
  CHECK(p.inequality_keys() == box_system(vec({0}), vec({1})).inequality_keys());
}

TEST_CASE("fm_eliminate agrees with projecting vertices") {
  // A 4-dimensional polytope, projected along each coordinate.
  LinearSystem s = sum_slab(4, 1, 2);
  s.add_inequality(vec({1, -1, 1, 0}), 1);
  s.add_inequality(vec({0, 2, -1, 1}), 2);
  const PointList v = hrep_to_vrep(s);
  for (std::size_t k = 0; k < 4; ++k) {
    PointList projected(3);
    for (const auto& p : v.points) {
      RationalVector q;
      for (std::size_t j = 0; j < 4; ++j) {
        if (j != k) q.push_back(p[j]);
      }
      projected.points.push_back(q);
    }
    projected.canonicalize();
    const LinearSystem expected = vrep_to_hrep(projected);
    CHECK(fm_eliminate(s, k).inequality_keys() == expected.inequality_keys());
  }
}

TEST_CASE("vrep_to_hrep of the square and a segment") {
  PointList sq(2, cube_points(2));
  LinearSystem h = vrep_to_hrep(sq);
  CHECK(h.equalities.empty());
  CHECK(h.inequality_keys() == box_system(RationalVector(2, 0), RationalVector(2, 1)).inequality_keys());

  PointList seg(3, {vec({0, 0, 0}), vec({1, 1, 1}), vec({2, 2, 2})});
  LinearSystem hs = vrep_to_hrep(seg);
  CHECK(hs.equalities.size() == 2);
  CHECK(hs.inequalities.size() == 2);
  CHECK(hrep_to_vrep(hs).points == std::vector<RationalVector>{vec({0, 0, 0}), vec({2, 2, 2})});

  PointList single(2, {vec({3, 4})});
  LinearSystem one = vrep_to_hrep(single);
  CHECK(one.inequalities.empty());
  CHECK(one.equalities.size() == 2);
}

TEST_CASE("hrep_to_vrep of the cube, infeasible and unbounded systems") {
  LinearSystem c = box_system(RationalVector(3, 0), RationalVector(3, 1));
  PointList v = hrep_to_vrep(c);
  PointList expected(3, cube_points(3));
  CHECK(v.points == expected.points);

  LinearSystem bad(2);
  bad.add_inequality(vec({1, 0}), 0);
  bad.add_inequality(vec({-1, 0}), -1);
  CHECK(hrep_to_vrep(bad).empty());
  bad.add_inequality(vec({0, 1}), 0);
  bad.add_inequality(vec({0, -1}), 0);
  CHECK(hrep_to_vrep(bad).empty());

  LinearSystem half(2);
  half.add_inequality(vec({-1, 0}), 0);
  half.add_inequality(vec({0, -1}), 0);
  CHECK_THROWS_AS(hrep_to_vrep(half), Error);
  LinearSystem strip(2);
  strip.add_inequality(vec({1, 0}), 1);
  strip.add_inequality(vec({-1, 0}), 0);
  CHECK_THROWS_AS(hrep_to_vrep(strip), Error);
}

TEST_CASE("round trip through both representations") {
  for (std::size_t d = 2; d <= 6; ++d) {
    for (int k = 1; k < static_cast<int>(d); ++k) {
      const LinearSystem s = sum_slab(d, k, k + 1);
      const PointList v = hrep_to_vrep(s);
      const LinearSystem h = vrep_to_hrep(v);
      CHECK(hrep_to_vrep(h).points == v.points);
      CHECK(remove_redundant(h).inequality_keys() == h.inequality_keys());
      // Every facet is tight on at least d affinely independent vertices.
      for (const auto& row : h.inequalities) {
        std::vector<RationalVector> tight;
        for (const auto& p : v.points) {
          if (dot(row.a, p) == row.c) tight.push_back(p);
        }
        REQUIRE(!tight.empty());
        CHECK(affine_hull(tight).dimension == d - 1);
      }
    }
  }
}

TEST_CASE("volume of simplices, cubes and cross-polytopes") {
  for (std::size_t d = 1; d <= 7; ++d) {
    std::vector<RationalVector> simplex{RationalVector(d)};
    for (std::size_t j = 0; j < d; ++j) {
      RationalVector e(d);
      e[j] = 1;
      simplex.push_back(e);
    }
    CHECK(volume(PointList(d, simplex)).volume == Rational(1) / Rational(factorial(d)));
    CHECK(volume(box_system(RationalVector(d, 0), RationalVector(d, 1))).volume == 1);

    std::vector<RationalVector> cross;
    for (std::size_t j = 0; j < d; ++j) {
      RationalVector e(d);
      e[j] = 1;
      cross.push_back(e);
      e[j] = -1;
      cross.push_back(e);
    }
    CHECK(volume(PointList(d, cross)).volume == Rational(Integer(1) << d) / Rational(factorial(d)));
  }
}

TEST_CASE("volume of hypersimplex slabs equals Eulerian numbers over d!") {
  for (unsigned d = 2; d <= 7; ++d) {
    for (unsigned k = 0; k < d; ++k) {
      const Rational expected = Rational(eulerian(d, k)) / Rational(factorial(d));
      const VolumeResult r = volume(sum_slab(d, static_cast<int>(k), static_cast<int>(k + 1)));
      CHECK(r.full_dimensional);
      CHECK(r.volume == expected);
    }
  }
}

TEST_CASE("volume is anchor independent and scales with diagonal maps") {
  const LinearSystem s = sum_slab(4, 1, 2);
  const PointList v = hrep_to_vrep(s);
  const Rational base = volume(v).volume;
  for (const auto& anchor : v.points) CHECK(volume(v, anchor).volume == base);
  CHECK(volume(v, RationalVector{R("1/2"), R("1/4"), R("1/4"), R("1/3")}).volume == base);

  const RationalVector scale{R("2"), R("1/3"), R("5/7"), R("3")};
  PointList scaled(4);
  Rational jac = 1;
  for (const auto& s_j : scale) jac *= s_j;
  for (const auto& p : v.points) {
    RationalVector q(4);
    for (std::size_t j = 0; j < 4; ++j) q[j] = p[j] * scale[j];
    scaled.points.push_back(q);
  }
  scaled.canonicalize();
  CHECK(volume(scaled).volume == base * jac);

  PointList permuted(4);
  for (const auto& p : v.points) permuted.points.push_back({p[2], p[0], p[3], p[1]});
  permuted.canonicalize();
  CHECK(volume(permuted).volume == base);
}

TEST_CASE("lower-dimensional bodies have zero volume with a flag") {
  LinearSystem s = box_system(RationalVector(3, 0), RationalVector(3, 1));
  s.add_equality(vec({1, 1, 1}), 1);
  const VolumeResult r = volume(s);
  CHECK_FALSE(r.full_dimensional);
  CHECK(r.volume == 0);
  PointList flat(2, {vec({0, 0}), vec({1, 1}), vec({2, 2})});
  CHECK_FALSE(volume(flat).full_dimensional);
}

TEST_CASE("serialization round trip") {
  LinearSystem s = sum_slab(3, 0, 2);
  s.add_equality(RationalVector{R("1/2"), R("-3"), R("0")}, R("7/9"));
  const LinearSystem back = linear_system_from_json(to_json(s));
  CHECK(back.inequalities == s.inequalities);
  CHECK(back.equalities == s.equalities);
  CHECK(back.names == s.names);
  const PointList v = hrep_to_vrep(sum_slab(3, 1, 2));
  CHECK(point_list_from_json(to_json(v)).points == v.points);
}
