#include "margpoly/linear_system.hpp"

#include <algorithm>
#include <sstream>

#include "margpoly/error.hpp"

namespace margpoly {

RowKey normalize(const Row& row) {
  RationalVector all = row.a;
  all.push_back(row.c);
  IntegerVector ints = primitive_integer(all);
  RowKey key;
  key.c = ints.back();
  ints.pop_back();
  key.a = std::move(ints);
  return key;
}

Row to_row(const RowKey& key) {
  Row row;
  row.a.reserve(key.a.size());
  for (const auto& x : key.a) row.a.emplace_back(x);
  row.c = Rational(key.c);
  return row;
}

LinearSystem::LinearSystem(std::size_t d) : dim(d) {
  for (std::size_t i = 0; i < d; ++i) names.push_back("y" + std::to_string(i));
}

LinearSystem::LinearSystem(std::size_t d, std::vector<std::string> coordinate_names)
    : dim(d), names(std::move(coordinate_names)) {
  if (names.size() != d) throw Error(ErrorKind::Invalid, "coordinate name count does not match dimension");
}

void LinearSystem::add_inequality(RationalVector a, Rational c) {
  if (a.size() != dim) throw Error(ErrorKind::Invalid, "row length does not match dimension");
  inequalities.push_back({std::move(a), std::move(c)});
}

void LinearSystem::add_equality(RationalVector a, Rational c) {
  if (a.size() != dim) throw Error(ErrorKind::Invalid, "row length does not match dimension");
  equalities.push_back({std::move(a), std::move(c)});
}

bool LinearSystem::contains(const RationalVector& y) const {
  if (y.size() != dim) throw Error(ErrorKind::Invalid, "point length does not match dimension");
  if (infeasible) return false;
  for (const auto& row : inequalities)
    if (dot(row.a, y) > row.c) return false;
  for (const auto& row : equalities)
    if (dot(row.a, y) != row.c) return false;
  return true;
}

std::size_t LinearSystem::coordinate(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw Error(ErrorKind::NotFound, "no coordinate named '" + name + "'");
  return static_cast<std::size_t>(it - names.begin());
}

std::set<RowKey> LinearSystem::inequality_keys() const {
  std::set<RowKey> keys;
  for (const auto& row : inequalities) keys.insert(normalize(row));
  return keys;
}

void LinearSystem::validate() const {
  if (names.size() != dim) throw Error(ErrorKind::Invalid, "coordinate name count does not match dimension");
  for (const auto* rows : {&inequalities, &equalities}) {
    for (const auto& row : *rows) {
      if (row.a.size() != dim) throw Error(ErrorKind::Invalid, "row length does not match dimension");
    }
  }
  if (!infeasible) {
    for (const auto& row : inequalities) {
      bool zero = std::all_of(row.a.begin(), row.a.end(), [](const Rational& x) { return x == 0; });
      if (zero && row.c < 0) throw Error(ErrorKind::Invalid, "0 <= negative row in a system not marked infeasible");
    }
  }
}

LinearSystem box_system(const RationalVector& lo, const RationalVector& hi) {
  LinearSystem system(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    RationalVector a(lo.size(), Rational(0));
    a[i] = -1;
    system.add_inequality(a, -lo[i]);
    a[i] = 1;
    system.add_inequality(a, hi[i]);
  }
  return system;
}

PointList::PointList(std::size_t d, std::vector<RationalVector> pts) : dim(d), points(std::move(pts)) {
  for (const auto& p : points) {
    if (p.size() != dim) throw Error(ErrorKind::Invalid, "point length does not match dimension");
  }
  canonicalize();
}

void PointList::canonicalize() {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

namespace {

nlohmann::json rationals_to_json(const RationalVector& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

RationalVector rationals_from_json(const nlohmann::json& j) {
  RationalVector out;
  for (const auto& x : j) out.push_back(parse_rational(x.get<std::string>()));
  return out;
}

}  // namespace

nlohmann::json to_json(const Row& row) { return {{"a", rationals_to_json(row.a)}, {"c", to_string(row.c)}}; }

nlohmann::json to_json(const LinearSystem& system) {
  nlohmann::json ineq = nlohmann::json::array();
  for (const auto& row : system.inequalities) ineq.push_back(to_json(row));
  nlohmann::json eq = nlohmann::json::array();
  for (const auto& row : system.equalities) eq.push_back(to_json(row));
  return {{"dim", system.dim},
          {"names", system.names},
          {"inequalities", ineq},
          {"equalities", eq},
          {"infeasible", system.infeasible}};
}

nlohmann::json to_json(const PointList& points) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : points.points) pts.push_back(rationals_to_json(p));
  return {{"dim", points.dim}, {"points", pts}};
}

LinearSystem linear_system_from_json(const nlohmann::json& j) {
  try {
    LinearSystem system(j.at("dim").get<std::size_t>(), j.at("names").get<std::vector<std::string>>());
    for (const auto& row : j.at("inequalities"))
      system.add_inequality(rationals_from_json(row.at("a")), parse_rational(row.at("c").get<std::string>()));
    if (j.contains("equalities")) {
      for (const auto& row : j.at("equalities"))
        system.add_equality(rationals_from_json(row.at("a")), parse_rational(row.at("c").get<std::string>()));
    }
    system.infeasible = j.value("infeasible", false);
    system.validate();
    return system;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("linear system JSON: ") + ex.what());
  }
}

PointList point_list_from_json(const nlohmann::json& j) {
  try {
    std::vector<RationalVector> pts;
    for (const auto& p : j.at("points")) pts.push_back(rationals_from_json(p));
    return PointList(j.at("dim").get<std::size_t>(), std::move(pts));
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("point list JSON: ") + ex.what());
  }
}

std::string format_row(const Row& row, const std::vector<std::string>& names, const char* relation) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < row.a.size(); ++i) {
    const Rational& x = row.a[i];
    if (x == 0) continue;
    const bool negative = x < 0;
    const Rational magnitude = negative ? Rational(-x) : x;
    if (first) {
      out << (negative ? "-" : "");
    } else {
      out << (negative ? " - " : " + ");
    }
    if (magnitude != 1) {
      if (boost::multiprecision::denominator(magnitude) == 1) {
        out << boost::multiprecision::numerator(magnitude) << " ";
      } else {
        out << "(" << magnitude << ") ";
      }
    }
    out << (i < names.size() ? names[i] : "y" + std::to_string(i));
    first = false;
  }
  if (first) out << "0";
  out << " " << relation << " ";
  if (boost::multiprecision::denominator(row.c) == 1) {
    out << boost::multiprecision::numerator(row.c);
  } else {
    out << row.c;
  }
  return out.str();
}

}  // namespace margpoly
