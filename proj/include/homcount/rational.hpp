#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace homcount {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& r);

/// Parses "p" or "p/q" with optional sign. Throws std::invalid_argument on
/// malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace homcount
