#include "margpoly/closed_forms.hpp"

#include <algorithm>

#include "margpoly/error.hpp"

namespace margpoly {

namespace {

const Rational kHalf(1, 2);
const Rational kThird(1, 3);

void require_open_unit(const Rational& t) {
  if (t <= 0 || t >= 1) throw Error(ErrorKind::Domain, "t must lie in (0,1), got " + to_string(t));
}

}  // namespace

Rational k3_symmetric_ratio(const Rational& t) {
  require_open_unit(t);
  if (t > kHalf) return k3_symmetric_ratio(1 - t);
  if (t <= kThird) return kHalf;
  return kHalf - pow(3 - 1 / t, 3) / 6;
}

Rational k3_skewed_ratio(const Rational& t) {
  if (t <= 0 || t >= kHalf) throw Error(ErrorKind::Domain, "t must lie in (0,1/2), got " + to_string(t));
  if (t <= Rational(1, 6)) return Rational(2, 3);
  if (t <= Rational(1, 4)) return Rational(2, 3) - pow(3 - 1 / (2 * t), 3) / 6;
  return 1 - (1 / (2 * t) - 1) / 2;
}

Rational k22_ratio(const Rational& t) {
  if (t <= 0 || t > 1) throw Error(ErrorKind::Domain, "t must lie in (0,1], got " + to_string(t));
  if (t == 1) return Rational(5, 6);
  if (t > kHalf) return k22_ratio(1 - t);
  if (t <= kThird) return Rational(5, 6);
  return (5 - pow(3 - 1 / t, 4)) / 6;
}

Rational cn_ratio(int n, const Rational& t) {
  if (n < 3) throw Error(ErrorKind::Domain, "cycle length must be at least 3");
  if (t <= 0 || t > kHalf) throw Error(ErrorKind::Domain, "t must lie in (0,1/2], got " + to_string(t));
  const unsigned un = static_cast<unsigned>(n);
  const Rational nf(factorial(un));
  Rational removed = 0;
  for (unsigned k = 1; k <= un; k += 2) {
    const Rational depth = std::max(Rational(0), Rational(k) - Rational(k - 1) / (2 * t));
    if (depth == 0) continue;
    removed += Rational(binomial(un, k)) / nf * pow(depth, un);
  }
  return 1 - removed;
}

CycleParameters cn_parameters(int n) {
  if (n < 3) throw Error(ErrorKind::Domain, "cycle length must be at least 3");
  const unsigned un = static_cast<unsigned>(n);
  return {kThird, 1 - Rational(1) / Rational(factorial(un - 1)),
          1 - Rational(Integer(1) << (un - 1)) / Rational(factorial(un))};
}

RatioFormula k3_symmetric_formula() {
  RatioFormula f;
  f.family = "K3-symmetric";
  f.pieces = {{0, kThird, false, true, "1/2"},
              {kThird, kHalf, false, true, "1/2 - (3 - 1/t)^3 / 6"},
              {kHalf, Rational(2, 3), false, false, "ratio(1 - t)"},
              {Rational(2, 3), 1, true, false, "1/2"}};
  f.tau = kThird;
  f.rho0 = kHalf;
  f.rho_half = kThird;
  f.evaluate = k3_symmetric_ratio;
  return f;
}

RatioFormula k3_skewed_formula() {
  RatioFormula f;
  f.family = "K3-skewed";
  f.pieces = {{0, Rational(1, 6), false, true, "2/3"},
              {Rational(1, 6), Rational(1, 4), false, true, "2/3 - (3 - 1/(2t))^3 / 6"},
              {Rational(1, 4), kHalf, false, false, "1 - (1/(2t) - 1) / 2"}};
  f.tau = Rational(1, 6);
  f.rho0 = Rational(2, 3);
  f.rho_half = 1;
  f.evaluate = k3_skewed_ratio;
  return f;
}

RatioFormula k22_formula() {
  RatioFormula f;
  f.family = "K22";
  f.pieces = {{0, kThird, false, true, "5/6"},
              {kThird, kHalf, false, true, "(5 - (3 - 1/t)^4) / 6"},
              {kHalf, Rational(2, 3), false, false, "ratio(1 - t)"},
              {Rational(2, 3), 1, true, true, "5/6"}};
  f.tau = kThird;
  f.rho0 = Rational(5, 6);
  f.rho_half = Rational(2, 3);
  f.evaluate = k22_ratio;
  return f;
}

RatioFormula cn_formula(int n) {
  const CycleParameters params = cn_parameters(n);
  RatioFormula f;
  f.family = "C" + std::to_string(n);
  f.pieces = {{0, kHalf, false, true, "1 - sum_{k odd} C(n,k)/n! * max(0, k - (k-1)/(2t))^n"}};
  f.tau = params.tau;
  f.rho0 = params.rho0;
  f.rho_half = params.rho_half;
  f.evaluate = [n](const Rational& t) { return cn_ratio(n, t); };
  return f;
}

}  // namespace margpoly
