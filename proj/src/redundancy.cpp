#include "margpoly/redundancy.hpp"

#include <algorithm>

#include "margpoly/error.hpp"
#include "margpoly/lp.hpp"

namespace margpoly {

namespace {

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// Row i is implied by the others iff some nonnegative combination of them
// (plus free multiples of the equalities) reproduces a_i with constant <= c_i.
bool implied(const LinearSystem& system, const std::vector<bool>& kept, std::size_t i) {
  const std::size_t d = system.dim;
  std::vector<const Row*> cols;
  std::vector<int> sign;
  for (std::size_t k = 0; k < system.inequalities.size(); ++k) {
    if (k == i || !kept[k]) continue;
    cols.push_back(&system.inequalities[k]);
    sign.push_back(1);
  }
  for (const auto& row : system.equalities) {
    cols.push_back(&row);
    sign.push_back(1);
    cols.push_back(&row);
    sign.push_back(-1);
  }
  std::vector<RationalVector> A(d, RationalVector(cols.size()));
  RationalVector cost(cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    for (std::size_t j = 0; j < d; ++j) A[j][k] = sign[k] * cols[k]->a[j];
    cost[k] = sign[k] * cols[k]->c;
  }
  const LpResult result = solve_standard_form(A, system.inequalities[i].a, cost);
  if (result.status == LpStatus::Unbounded) return true;
  return result.status == LpStatus::Optimal && result.value <= system.inequalities[i].c;
}

}  // namespace

LinearSystem remove_redundant(const LinearSystem& system) {
  system.validate();
  if (system.infeasible || !is_feasible(system)) throw Error(ErrorKind::Infeasible, "system has no feasible point");

  std::vector<bool> kept(system.inequalities.size(), true);
  for (std::size_t i = 0; i < system.inequalities.size(); ++i) {
    if (is_zero(system.inequalities[i].a)) {
      kept[i] = false;
      continue;
    }
  }
  for (std::size_t i = 0; i < system.inequalities.size(); ++i) {
    if (kept[i] && implied(system, kept, i)) kept[i] = false;
  }

  LinearSystem out(system.dim, system.names);
  out.equalities = system.equalities;
  for (std::size_t i = 0; i < system.inequalities.size(); ++i) {
    if (kept[i]) out.inequalities.push_back(system.inequalities[i]);
  }
  return out;
}

LinearSystem fm_eliminate(const LinearSystem& system, std::size_t coordinate) {
  system.validate();
  if (coordinate >= system.dim) throw Error(ErrorKind::NotFound, "coordinate index out of range");

  auto drop = [coordinate](const Row& row) {
    Row out;
    out.c = row.c;
    for (std::size_t j = 0; j < row.a.size(); ++j) {
      if (j != coordinate) out.a.push_back(row.a[j]);
    }
    return out;
  };
  // out_row = row - (row.a[k] / pivot.a[k]) * pivot
  auto eliminate_with = [coordinate](const Row& row, const Row& pivot) {
    Row out = row;
    const Rational f = row.a[coordinate] / pivot.a[coordinate];
    for (std::size_t j = 0; j < row.a.size(); ++j) out.a[j] -= f * pivot.a[j];
    out.c -= f * pivot.c;
    return out;
  };

  std::vector<std::string> names = system.names;
  names.erase(names.begin() + static_cast<std::ptrdiff_t>(coordinate));
  LinearSystem out(system.dim - 1, names);
  out.infeasible = system.infeasible;

  auto pivot_eq = std::find_if(system.equalities.begin(), system.equalities.end(),
                               [coordinate](const Row& row) { return row.a[coordinate] != 0; });
  if (pivot_eq != system.equalities.end()) {
    for (const auto& row : system.inequalities) out.inequalities.push_back(drop(eliminate_with(row, *pivot_eq)));
    for (auto it = system.equalities.begin(); it != system.equalities.end(); ++it) {
      if (it != pivot_eq) out.equalities.push_back(drop(eliminate_with(*it, *pivot_eq)));
    }
  } else {
    std::vector<const Row*> positive;
    std::vector<const Row*> negative;
    for (const auto& row : system.inequalities) {
      const Rational& a = row.a[coordinate];
      if (a > 0) {
        positive.push_back(&row);
      } else if (a < 0) {
        negative.push_back(&row);
      } else {
        out.inequalities.push_back(drop(row));
      }
    }
    for (const Row* pos : positive) {
      for (const Row* neg : negative) {
        const Rational lp = pos->a[coordinate];
        const Rational ln = -neg->a[coordinate];
        Row combined;
        combined.a.resize(system.dim);
        for (std::size_t j = 0; j < system.dim; ++j) combined.a[j] = ln * pos->a[j] + lp * neg->a[j];
        combined.c = ln * pos->c + lp * neg->c;
        out.inequalities.push_back(drop(combined));
      }
    }
    for (const auto& row : system.equalities) out.equalities.push_back(drop(row));
  }

  for (const auto& row : out.inequalities) {
    if (is_zero(row.a) && row.c < 0) out.infeasible = true;
  }
  std::erase_if(out.equalities, [&out](const Row& row) {
    if (!is_zero(row.a)) return false;
    if (row.c != 0) out.infeasible = true;
    return true;
  });
  if (out.infeasible) return out;
  return remove_redundant(out);
}

LinearSystem fm_eliminate(const LinearSystem& system, const std::string& coordinate) {
  return fm_eliminate(system, system.coordinate(coordinate));
}

}  // namespace margpoly
