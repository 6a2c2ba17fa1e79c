#include "nodal/rational.hpp"

#include <cctype>

namespace nodal {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw std::invalid_argument("not a rational: '" + std::string(s) + "'");
  if (s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-')
    throw std::invalid_argument("denominator must be positive: '" + std::string(text) + "'");
  Integer den = parse_integer(den_text);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& value) { return value.str(); }

Integer numerator_of(const Rational& value) { return boost::multiprecision::numerator(value); }

Integer denominator_of(const Rational& value) { return boost::multiprecision::denominator(value); }

Rational power(const Rational& base, int exponent) {
  Rational result = 1;
  Rational b = exponent >= 0 ? base : Rational(1) / base;
  for (int e = exponent >= 0 ? exponent : -exponent; e > 0; e >>= 1) {
    if (e & 1) result *= b;
    b *= b;
  }
  return result;
}

}  // namespace nodal
