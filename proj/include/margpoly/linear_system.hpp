#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "margpoly/rational.hpp"

namespace margpoly {

/// a . y <= c (inequality) or a . y = c (equality), depending on the container.
struct Row {
  RationalVector a;
  Rational c;

  bool operator==(const Row&) const = default;
};

/// Integer-scaled form of a row: coefficients and constant with gcd 1, the
/// orientation of the inequality preserved.  Used as a set key.
struct RowKey {
  IntegerVector a;
  Integer c;

  bool operator==(const RowKey&) const = default;
  bool operator<(const RowKey& other) const {
    if (a != other.a) return a < other.a;
    return c < other.c;
  }
};

RowKey normalize(const Row& row);
Row to_row(const RowKey& key);

/// H-representation: inequalities and equalities over named coordinates.
struct LinearSystem {
  std::size_t dim = 0;
  std::vector<std::string> names;
  std::vector<Row> inequalities;
  std::vector<Row> equalities;
  bool infeasible = false;

  LinearSystem() = default;
  explicit LinearSystem(std::size_t d);
  LinearSystem(std::size_t d, std::vector<std::string> coordinate_names);

  void add_inequality(RationalVector a, Rational c);
  void add_equality(RationalVector a, Rational c);

  /// Exact membership test.
  bool contains(const RationalVector& y) const;

  /// Index of a coordinate by name; throws not-found.
  std::size_t coordinate(const std::string& name) const;

  /// Normalized inequality keys (duplicates collapse).
  std::set<RowKey> inequality_keys() const;

  /// Throws invalid when a row length disagrees with dim.
  void validate() const;
};

/// Axis-aligned box lo <= y <= hi.
LinearSystem box_system(const RationalVector& lo, const RationalVector& hi);

/// V-representation: a finite point set, convex hull implied.
struct PointList {
  std::size_t dim = 0;
  std::vector<RationalVector> points;

  PointList() = default;
  explicit PointList(std::size_t d) : dim(d) {}
  PointList(std::size_t d, std::vector<RationalVector> pts);

  /// Sorts lexicographically and removes duplicates.
  void canonicalize();
  bool empty() const noexcept { return points.empty(); }
  std::size_t size() const noexcept { return points.size(); }
};

nlohmann::json to_json(const Row& row);
nlohmann::json to_json(const LinearSystem& system);
nlohmann::json to_json(const PointList& points);
LinearSystem linear_system_from_json(const nlohmann::json& j);
PointList point_list_from_json(const nlohmann::json& j);

/// Human readable "2 p0 - q0_1 <= 1".
std::string format_row(const Row& row, const std::vector<std::string>& names, const char* relation = "<=");

}  // namespace margpoly
