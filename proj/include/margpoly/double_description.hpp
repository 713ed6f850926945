#pragma once

#include <cstddef>
#include <vector>

#include "margpoly/linear_system.hpp"
#include "margpoly/rational.hpp"

namespace margpoly {

/// Extreme rays of the pointed cone {x : r . x >= 0 for every row r}, as
/// primitive integer vectors. The rows must have full column rank.
std::vector<IntegerVector> extreme_rays(const std::vector<IntegerVector>& rows);

/// Affine hull of a nonempty point set: equalities spanning it and a set of
/// coordinates on which the projection of the hull is injective.
struct AffineHull {
  std::size_t dimension = 0;
  std::vector<Row> equalities;
  std::vector<std::size_t> free_coordinates;
};

AffineHull affine_hull(const std::vector<RationalVector>& points);

/// Facets (irredundant) plus affine-hull equalities of conv(V).
LinearSystem vrep_to_hrep(const PointList& points);
LinearSystem vrep_to_hrep(const PointList& points, std::vector<std::string> names);

/// Vertices of a bounded polyhedron; empty when infeasible, throws unbounded.
PointList hrep_to_vrep(const LinearSystem& system);

}  // namespace margpoly
