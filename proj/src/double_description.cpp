#include "margpoly/double_description.hpp"

#include <boost/dynamic_bitset.hpp>

#include "margpoly/error.hpp"
#include "margpoly/linalg.hpp"
#include "margpoly/lp.hpp"

namespace margpoly {

namespace {

using Bits = boost::dynamic_bitset<>;

struct Ray {
  IntegerVector x;
  Bits zeros;
};

Integer dot(const IntegerVector& a, const IntegerVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  }
  return s;
}

IntegerVector primitive(IntegerVector v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, abs(x));
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

RationalVector to_rational(const IntegerVector& v) {
  RationalVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

std::vector<std::size_t> independent_rows(const std::vector<IntegerVector>& rows, std::size_t d) {
  Echelon e(d);
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < rows.size() && picked.size() < d; ++i) {
    if (e.insert(to_rational(rows[i]))) picked.push_back(i);
  }
  return picked;
}

}  // namespace

std::vector<IntegerVector> extreme_rays(const std::vector<IntegerVector>& rows) {
  if (rows.empty()) throw Error(ErrorKind::Invalid, "cone needs at least one row");
  const std::size_t d = rows.front().size();
  const std::size_t m = rows.size();
  const std::vector<std::size_t> basis = independent_rows(rows, d);
  if (basis.size() < d) throw Error(ErrorKind::Invalid, "cone is not pointed");

  std::vector<RationalVector> b;
  for (std::size_t i : basis) b.push_back(to_rational(rows[i]));
  const std::vector<RationalVector> inv = inverse(b);

  std::vector<bool> processed(m, false);
  for (std::size_t i : basis) processed[i] = true;

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < d; ++j) {
    RationalVector col(d);
    for (std::size_t i = 0; i < d; ++i) col[i] = inv[i][j];
    Ray r{primitive_integer(col), Bits(m)};
    for (std::size_t k = 0; k < d; ++k) {
      if (k != j) r.zeros.set(basis[k]);
    }
    rays.push_back(std::move(r));
  }

  // Insert next the row that cuts off the most current rays.
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t h = m;
    long best = -1;
    for (std::size_t c = 0; c < m; ++c) {
      if (processed[c]) continue;
      long cut = 0;
      for (const auto& r : rays) cut += dot(rows[c], r.x) < 0;
      if (cut > best) {
        best = cut;
        h = c;
      }
    }
    if (h == m) break;
    processed[h] = true;
    std::vector<Integer> s(rays.size());
    std::vector<std::size_t> pos;
    std::vector<std::size_t> neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      s[r] = dot(rows[h], rays[r].x);
      if (s[r] > 0) {
        pos.push_back(r);
      } else if (s[r] < 0) {
        neg.push_back(r);
      } else {
        rays[r].zeros.set(h);
      }
    }
    if (neg.empty()) continue;

    std::vector<Ray> next;
    for (std::size_t p : pos) {
      for (std::size_t n : neg) {
        Bits common = rays[p].zeros & rays[n].zeros;
        if (d >= 2 && common.count() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != n && common.is_subset_of(rays[r].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        IntegerVector x(d);
        const Integer& sp = s[p];
        const Integer sn = -s[n];
        for (std::size_t i = 0; i < d; ++i) x[i] = sp * rays[n].x[i] + sn * rays[p].x[i];
        common.set(h);
        next.push_back({primitive(std::move(x)), std::move(common)});
      }
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (s[r] >= 0) next.push_back(std::move(rays[r]));
    }
    rays = std::move(next);
  }

  std::vector<IntegerVector> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.x));
  return out;
}

AffineHull affine_hull(const std::vector<RationalVector>& points) {
  if (points.empty()) throw Error(ErrorKind::Invalid, "affine hull of an empty set");
  const std::size_t d = points.front().size();
  Echelon e(d);
  for (std::size_t i = 1; i < points.size() && e.rank() < d; ++i) {
    RationalVector diff(d);
    for (std::size_t j = 0; j < d; ++j) diff[j] = points[i][j] - points[0][j];
    e.insert(std::move(diff));
  }
  AffineHull hull;
  hull.dimension = e.rank();
  hull.free_coordinates = e.pivots;
  for (auto& a : e.nullspace()) {
    Row row{std::move(a), Rational(0)};
    row.c = dot(row.a, points[0]);
    hull.equalities.push_back(to_row(normalize(row)));
  }
  return hull;
}

LinearSystem vrep_to_hrep(const PointList& points) { return vrep_to_hrep(points, LinearSystem(points.dim).names); }

LinearSystem vrep_to_hrep(const PointList& points, std::vector<std::string> names) {
  if (points.empty()) throw Error(ErrorKind::Invalid, "vrep_to_hrep needs at least one point");
  const std::size_t d = points.dim;
  LinearSystem out(d, std::move(names));
  const AffineHull hull = affine_hull(points.points);
  out.equalities = hull.equalities;
  const std::size_t k = hull.dimension;
  if (k == 0) return out;

  // (c, a) with c - a . pi(v) >= 0 for every point.
  std::vector<IntegerVector> rows;
  rows.reserve(points.size());
  for (const auto& v : points.points) {
    RationalVector r(k + 1);
    r[0] = 1;
    for (std::size_t i = 0; i < k; ++i) r[i + 1] = -v[hull.free_coordinates[i]];
    rows.push_back(primitive_integer(r));
  }
  for (const auto& ray : extreme_rays(rows)) {
    bool zero = true;
    for (std::size_t i = 1; i <= k; ++i) zero = zero && ray[i] == 0;
    if (zero) continue;
    RationalVector a(d);
    for (std::size_t i = 0; i < k; ++i) a[hull.free_coordinates[i]] = Rational(ray[i + 1]);
    out.add_inequality(std::move(a), Rational(ray[0]));
  }
  return out;
}

PointList hrep_to_vrep(const LinearSystem& system) {
  system.validate();
  const std::size_t d = system.dim;
  PointList out(d);
  if (system.infeasible) return out;

  // Homogenize: x = (lambda, lambda * y).
  std::vector<IntegerVector> rows;
  auto push = [&rows, d](const RationalVector& a, const Rational& c, int sign) {
    RationalVector r(d + 1);
    r[0] = sign * c;
    for (std::size_t j = 0; j < d; ++j) r[j + 1] = -sign * a[j];
    rows.push_back(primitive_integer(r));
  };
  {
    RationalVector lambda(d + 1);
    lambda[0] = 1;
    rows.push_back(primitive_integer(lambda));
  }
  for (const auto& row : system.inequalities) push(row.a, row.c, 1);
  for (const auto& row : system.equalities) {
    push(row.a, row.c, 1);
    push(row.a, row.c, -1);
  }

  if (independent_rows(rows, d + 1).size() < d + 1) {
    if (!is_feasible(system)) return out;
    throw Error(ErrorKind::Unbounded, "polyhedron contains a line");
  }

  bool recession = false;
  for (const auto& ray : extreme_rays(rows)) {
    if (ray[0] == 0) {
      recession = true;
      continue;
    }
    RationalVector y(d);
    for (std::size_t j = 0; j < d; ++j) y[j] = Rational(ray[j + 1], ray[0]);
    out.points.push_back(std::move(y));
  }
  if (out.points.empty()) return out;
  if (recession) throw Error(ErrorKind::Unbounded, "polyhedron is unbounded");
  out.canonicalize();
  return out;
}

}  // namespace margpoly
