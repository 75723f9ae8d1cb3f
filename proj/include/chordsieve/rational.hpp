#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace chordsieve {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "num/den" with den > 0, always including the denominator ("2/1").
std::string to_fraction_string(const Rational& q);

// Like to_fraction_string but drops a unit denominator ("2", "-5/4").
std::string to_short_string(const Rational& q);

// Accepts "a", "a/b", and plain decimals such as "-0.125" or "1e-3".
// Decimal input is converted exactly (0.1 becomes 1/10).
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

Rational binomial(int n, int k);

}  // namespace chordsieve
