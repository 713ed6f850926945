#pragma once

#include <cstddef>
#include <vector>

#include "margpoly/rational.hpp"

namespace margpoly {

/// Reduced row echelon form of the span of some vectors: `rows[i]` has a 1 in
/// column `pivots[i]` and 0 in every other pivot column.
struct Echelon {
  std::size_t cols = 0;
  std::vector<RationalVector> rows;
  std::vector<std::size_t> pivots;

  explicit Echelon(std::size_t columns) : cols(columns) {}

  std::size_t rank() const noexcept { return rows.size(); }

  /// Adds v to the span; returns false when v was already in it.
  bool insert(RationalVector v);

  /// v minus its component along the current rows (zero iff v is in the span).
  RationalVector reduce(RationalVector v) const;

  /// Basis of {x : r . x = 0 for every row r}.
  std::vector<RationalVector> nullspace() const;
};

Echelon echelon(const std::vector<RationalVector>& vectors, std::size_t cols);

/// Inverse of a square nonsingular matrix; throws invalid when singular.
std::vector<RationalVector> inverse(const std::vector<RationalVector>& m);

}  // namespace margpoly
