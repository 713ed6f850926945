#pragma once

#include <cstddef>

#include "margpoly/linear_system.hpp"
#include "margpoly/rational.hpp"

namespace margpoly {

struct VolumeResult {
  Rational volume;
  /// False when the body spans less than its coordinate space; volume is then 0.
  bool full_dimensional = true;
  std::size_t vertices = 0;
  std::size_t facets = 0;
};

/// Exact Lebesgue volume of conv(points) in R^dim.
VolumeResult volume(const PointList& points);

/// Same, with the cone decomposition anchored at `anchor` (must lie in the body).
VolumeResult volume(const PointList& points, const RationalVector& anchor);

/// Exact volume of a bounded H-polytope; throws unbounded.
VolumeResult volume(const LinearSystem& system);

/// Volume from a vertex list together with inequalities valid for it (the
/// facet rows must be among them; redundant rows are harmless).
VolumeResult volume(const std::vector<RationalVector>& vertices, const std::vector<Row>& inequalities,
                    const RationalVector& anchor);

}  // namespace margpoly
