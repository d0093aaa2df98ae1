#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace gkd {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. Canonical form (denominator > 0, gcd(|num|, den) = 1)
// is maintained by the backend after every construction and arithmetic op.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "a", "a/b" (b > 0) or a signed decimal ("3.5" -> 7/2, exactly).
/// Throws std::invalid_argument naming the offending token.
Rational parse_rational(std::string_view text);

/// Parses a comma-separated list of rationals. Empty input -> empty list.
std::vector<Rational> parse_rational_list(std::string_view text);

/// Canonical text form: "a/b" with b > 1, plain "a" for integers.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);
bool is_half_integer(const Rational& value);  // in 1/2 + Z

Int floor_int(const Rational& value);
Int ceil_int(const Rational& value);

/// value - floor(value), in [0, 1).
Rational residue_mod1(const Rational& value);

}  // namespace gkd
