#pragma once

#include <vector>

#include "margpoly/linear_system.hpp"
#include "margpoly/rational.hpp"

namespace margpoly {

enum class LpStatus { Optimal, Infeasible, Unbounded };
enum class Sense { Maximize, Minimize };

const char* to_string(LpStatus status);

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  RationalVector witness;
};

/// min c.x subject to A x = b, x >= 0, by the two-phase simplex method with
/// Bland's rule on a dense rational tableau.
LpResult solve_standard_form(const std::vector<RationalVector>& A, const RationalVector& b, const RationalVector& c);

/// Optimizes objective . y over the system; the witness is a basic solution.
LpResult lp(const LinearSystem& system, const RationalVector& objective, Sense sense);

bool is_feasible(const LinearSystem& system);

}  // namespace margpoly
