#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace lsa {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar, always in lowest terms with positive denominator.
// Equality is exact; no epsilon appears anywhere in this library.
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& value);

// Parses "p" or "p/q" with an optional leading sign.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace lsa
