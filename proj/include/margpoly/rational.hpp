#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace margpoly {

// Expression templates are disabled: values are stored and passed around far
// more often than long arithmetic chains are built.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

/// Parses "num/den", an integer, or an exact decimal such as "0.375" or "-1.5e-2".
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form (the denominator is always written).
std::string to_string(const Rational& value);

double to_double(const Rational& value);

Rational pow(const Rational& base, unsigned exponent);

Integer factorial(unsigned n);

Integer binomial(unsigned n, unsigned k);

/// Dot product of equal-length vectors.
Rational dot(const RationalVector& a, const RationalVector& b);

/// Smallest positive rational s such that s * v is an integer vector with gcd 1.
/// Returns the scaled vector; the zero vector maps to itself.
IntegerVector primitive_integer(const RationalVector& v);

}  // namespace margpoly
