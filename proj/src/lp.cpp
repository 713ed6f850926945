#include "margpoly/lp.hpp"

#include <cstddef>
#include <limits>

#include "margpoly/error.hpp"

namespace margpoly {

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Rows 0..m-1 are constraints, row m is the objective (reduced costs, with the
// negated objective value in the last column).
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), t_(rows + 1, RationalVector(cols + 1)), basis_(rows) {}

  Rational& at(std::size_t i, std::size_t j) { return t_[i][j]; }
  Rational& rhs(std::size_t i) { return t_[i][n_]; }
  Rational& cost(std::size_t j) { return t_[m_][j]; }
  std::size_t& basic(std::size_t i) { return basis_[i]; }
  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }

  void pivot(std::size_t r, std::size_t col) {
    const Rational inv = Rational(1) / t_[r][col];
    for (std::size_t j = 0; j <= n_; ++j) {
      if (t_[r][j] != 0) t_[r][j] *= inv;
    }
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r || t_[i][col] == 0) continue;
      const Rational f = t_[i][col];
      for (std::size_t j = 0; j <= n_; ++j) {
        if (t_[r][j] != 0) t_[i][j] -= f * t_[r][j];
      }
    }
    basis_[r] = col;
  }

  // Runs Bland's rule over the columns flagged in `allowed`; false when unbounded.
  bool optimize(const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < n_; ++j) {
        if (allowed[j] && t_[m_][j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return true;
      std::size_t leave = kNone;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = t_[i][n_] / t_[i][enter];
        if (leave == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == kNone) return false;
      pivot(leave, enter);
    }
  }

  void drop_row(std::size_t r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --m_;
  }

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<RationalVector> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_standard_form(const std::vector<RationalVector>& A, const RationalVector& b, const RationalVector& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  if (b.size() != m) throw Error(ErrorKind::Invalid, "constraint and right-hand side sizes differ");
  for (const auto& row : A) {
    if (row.size() != n) throw Error(ErrorKind::Invalid, "constraint row length differs from objective length");
  }

  Tableau tab(m, n + m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = flip ? Rational(-A[i][j]) : A[i][j];
    tab.at(i, n + i) = 1;
    tab.rhs(i) = flip ? Rational(-b[i]) : b[i];
    tab.basic(i) = n + i;
  }
  // Phase one: minimize the sum of artificials.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) tab.cost(j) -= tab.at(i, j);
    tab.cost(n + m) -= tab.rhs(i);
  }
  std::vector<bool> allowed(n + m, true);
  tab.optimize(allowed);

  LpResult result;
  if (tab.cost(n + m) != 0) {
    result.status = LpStatus::Infeasible;
    return result;
  }
  // Drive remaining artificials out of the basis; rows with no real pivot are dependent.
  for (std::size_t i = tab.rows(); i-- > 0;) {
    if (tab.basic(i) < n) continue;
    std::size_t col = kNone;
    for (std::size_t j = 0; j < n; ++j) {
      if (tab.at(i, j) != 0) {
        col = j;
        break;
      }
    }
    if (col == kNone) {
      tab.drop_row(i);
    } else {
      tab.pivot(i, col);
    }
  }

  // Phase two.
  for (std::size_t j = 0; j <= n + m; ++j) tab.cost(j) = 0;
  for (std::size_t j = 0; j < n; ++j) tab.cost(j) = c[j];
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    const Rational cb = c[tab.basic(i)];
    if (cb == 0) continue;
    for (std::size_t j = 0; j < n; ++j) tab.cost(j) -= cb * tab.at(i, j);
    tab.cost(n + m) -= cb * tab.rhs(i);
  }
  for (std::size_t j = n; j < n + m; ++j) allowed[j] = false;
  if (!tab.optimize(allowed)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.witness.assign(n, Rational(0));
  for (std::size_t i = 0; i < tab.rows(); ++i) result.witness[tab.basic(i)] = tab.rhs(i);
  result.value = -tab.cost(n + m);
  return result;
}

LpResult lp(const LinearSystem& system, const RationalVector& objective, Sense sense) {
  const std::size_t d = system.dim;
  if (objective.size() != d) throw Error(ErrorKind::Invalid, "objective length does not match dimension");
  LpResult result;
  if (system.infeasible) return result;

  const std::size_t slacks = system.inequalities.size();
  const std::size_t n = 2 * d + slacks;
  std::vector<RationalVector> A;
  RationalVector b;
  auto add = [&](const Row& row, std::size_t slack) {
    RationalVector r(n);
    for (std::size_t j = 0; j < d; ++j) {
      r[j] = row.a[j];
      r[d + j] = -row.a[j];
    }
    if (slack != kNone) r[2 * d + slack] = 1;
    A.push_back(std::move(r));
    b.push_back(row.c);
  };
  for (std::size_t i = 0; i < slacks; ++i) add(system.inequalities[i], i);
  for (const auto& row : system.equalities) add(row, kNone);

  RationalVector c(n);
  for (std::size_t j = 0; j < d; ++j) {
    c[j] = sense == Sense::Minimize ? objective[j] : Rational(-objective[j]);
    c[d + j] = -c[j];
  }
  LpResult std_result = solve_standard_form(A, b, c);
  result.status = std_result.status;
  if (result.status != LpStatus::Optimal) return result;
  result.value = sense == Sense::Minimize ? std_result.value : Rational(-std_result.value);
  result.witness.resize(d);
  for (std::size_t j = 0; j < d; ++j) result.witness[j] = std_result.witness[j] - std_result.witness[d + j];
  return result;
}

bool is_feasible(const LinearSystem& system) {
  return lp(system, RationalVector(system.dim), Sense::Minimize).status == LpStatus::Optimal;
}

}  // namespace margpoly
