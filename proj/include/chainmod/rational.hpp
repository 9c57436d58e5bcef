#ifndef CHAINMOD_RATIONAL_HPP
#define CHAINMOD_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>

namespace chainmod {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or a plain decimal integer string. Throws ParseError-free
// std::runtime_error wrapped by callers; denominator must be nonzero.
Rational parse_rational(const std::string& text);

// "p/q" with q > 1, plain "n" otherwise. Round-trips through parse_rational.
std::string rational_to_string(const Rational& value);

double rational_to_double(const Rational& value);

// Exact square root when value is the square of a rational, nullopt otherwise.
std::optional<Rational> rational_sqrt(const Rational& value);

Rational rational_pow(const Rational& base, int exponent);

} // namespace chainmod

#endif
