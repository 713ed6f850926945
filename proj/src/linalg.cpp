#include "margpoly/linalg.hpp"

#include <algorithm>

#include "margpoly/error.hpp"

namespace margpoly {

RationalVector Echelon::reduce(RationalVector v) const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Rational f = v[pivots[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) {
      if (rows[i][j] != 0) v[j] -= f * rows[i][j];
    }
  }
  return v;
}

bool Echelon::insert(RationalVector v) {
  if (v.size() != cols) throw Error(ErrorKind::Invalid, "vector length does not match column count");
  v = reduce(std::move(v));
  auto it = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
  if (it == v.end()) return false;
  const std::size_t p = static_cast<std::size_t>(it - v.begin());
  const Rational inv = Rational(1) / v[p];
  for (auto& x : v) {
    if (x != 0) x *= inv;
  }
  for (auto& row : rows) {
    const Rational f = row[p];
    if (f == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) {
      if (v[j] != 0) row[j] -= f * v[j];
    }
  }
  // Keep rows ordered by pivot column.
  auto pos = std::lower_bound(pivots.begin(), pivots.end(), p);
  const auto offset = pos - pivots.begin();
  pivots.insert(pos, p);
  rows.insert(rows.begin() + offset, std::move(v));
  return true;
}

std::vector<RationalVector> Echelon::nullspace() const {
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(cols);
    x[f] = 1;
    for (std::size_t i = 0; i < rows.size(); ++i) x[pivots[i]] = -rows[i][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

Echelon echelon(const std::vector<RationalVector>& vectors, std::size_t cols) {
  Echelon e(cols);
  for (const auto& v : vectors) {
    e.insert(v);
    if (e.rank() == cols) break;
  }
  return e;
}

std::vector<RationalVector> inverse(const std::vector<RationalVector>& m) {
  const std::size_t n = m.size();
  std::vector<RationalVector> a(n, RationalVector(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error(ErrorKind::Invalid, "matrix is not square");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw Error(ErrorKind::Invalid, "matrix is singular");
    std::swap(a[piv], a[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  std::vector<RationalVector> out(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = a[i][n + j];
  }
  return out;
}

}  // namespace margpoly
