#pragma once

#include <functional>
#include <string>
#include <vector>

#include "margpoly/rational.hpp"

namespace margpoly {

/// One piece of a piecewise ratio formula, valid on (lo, hi] or [lo, hi] etc.
struct FormulaPiece {
  Rational lo;
  Rational hi;
  bool lo_closed = false;
  bool hi_closed = true;
  std::string expression;
};

struct RatioFormula {
  std::string family;
  std::vector<FormulaPiece> pieces;
  Rational tau;
  Rational rho0;
  Rational rho_half;
  std::function<Rational(const Rational&)> evaluate;
};

/// Symmetric K3 slices, t in (0,1).
Rational k3_symmetric_ratio(const Rational& t);

/// K3 slices with p = (t, t, 1/2 - t), t in (0, 1/2).
Rational k3_skewed_ratio(const Rational& t);

/// Symmetric K_{2,2} slices, t in (0,1].
Rational k22_ratio(const Rational& t);

/// Symmetric C_n slices, n >= 3, t in (0, 1/2].
Rational cn_ratio(int n, const Rational& t);

struct CycleParameters {
  Rational tau;
  Rational rho0;
  Rational rho_half;
};

CycleParameters cn_parameters(int n);

RatioFormula k3_symmetric_formula();
RatioFormula k3_skewed_formula();
RatioFormula k22_formula();
RatioFormula cn_formula(int n);

}  // namespace margpoly
