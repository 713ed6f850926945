#include "margpoly/rational.hpp"

#include <cctype>
#include <charconv>

#include "margpoly/error.hpp"

namespace margpoly {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::NotFound: return "not-found";
    case ErrorKind::InvalidGluing: return "invalid-gluing";
    case ErrorKind::UnsupportedSize: return "unsupported-size";
    case ErrorKind::Unbounded: return "unbounded";
    case ErrorKind::Infeasible: return "infeasible";
    case ErrorKind::InvalidMarginal: return "invalid-marginal";
    case ErrorKind::UseSymmetry: return "use-symmetry";
    case ErrorKind::Domain: return "domain-error";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::Invalid: return "invalid";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Parse: return "parse-error";
  }
  return "error";
}

namespace {

Integer parse_integer(std::string_view digits, std::string_view original) {
  if (digits.empty()) throw Error(ErrorKind::Parse, "not a rational: '" + std::string(original) + "'");
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw Error(ErrorKind::Parse, "not a rational: '" + std::string(original) + "'");
    }
  }
  return Integer(std::string(digits));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash), original);
    Integer den = parse_integer(text.substr(slash + 1), original);
    if (den == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(original) + "'");
    value = Rational(num, den);
  } else {
    int exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      auto [ptr, ec] = std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
      if (ec != std::errc() || ptr != exp_text.data() + exp_text.size() || exp_text.empty()) {
        throw Error(ErrorKind::Parse, "bad exponent in '" + std::string(original) + "'");
      }
      if (exp_negative) exponent = -exponent;
      text = text.substr(0, e);
    }
    std::string digits;
    int scale = 0;
    if (auto dot_pos = text.find('.'); dot_pos != std::string_view::npos) {
      digits = std::string(text.substr(0, dot_pos)) + std::string(text.substr(dot_pos + 1));
      scale = static_cast<int>(text.size() - dot_pos - 1);
      if (digits.empty()) throw Error(ErrorKind::Parse, "not a rational: '" + std::string(original) + "'");
    } else {
      digits = std::string(text);
    }
    value = Rational(parse_integer(digits, original));
    const int shift = exponent - scale;
    Integer ten_power = 1;
    for (int i = 0; i < std::abs(shift); ++i) ten_power *= 10;
    value = shift >= 0 ? value * Rational(ten_power) : value / Rational(ten_power);
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational factor = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= factor;
    exponent >>= 1u;
    if (exponent > 0) factor *= factor;
  }
  return result;
}

Integer factorial(unsigned n) {
  Integer result = 1;
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) sum += a[i] * b[i];
  }
  return sum;
}

IntegerVector primitive_integer(const RationalVector& v) {
  Integer common_den = 1;
  for (const auto& x : v) {
    common_den = boost::multiprecision::lcm(common_den, boost::multiprecision::denominator(x));
  }
  IntegerVector out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& x : v) {
    Integer scaled = boost::multiprecision::numerator(x) * (common_den / boost::multiprecision::denominator(x));
    g = boost::multiprecision::gcd(g, scaled);
    out.push_back(std::move(scaled));
  }
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

}  // namespace margpoly
