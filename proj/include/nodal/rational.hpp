#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace nodal {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

// Thrown when an operation is called outside its documented domain.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts "7", "-3", "2/5", "-10/4" (normalized). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

Integer numerator_of(const Rational& value);
Integer denominator_of(const Rational& value);

Rational power(const Rational& base, int exponent);

}  // namespace nodal
