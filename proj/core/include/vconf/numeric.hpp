#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace vconf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// Accepts "7", "-3/4", "0.125", "-2.50". Decimal strings are parsed exactly.
Rational parse_rational(std::string_view text);

// Integers print without a denominator; everything else as "a/b".
std::string to_string(const Rational& value);

// Three-way comparison by cross-multiplication. The backend's own operator<
// goes through repeated division and dominates geometry workloads.
int compare(const Rational& a, const Rational& b);
inline bool less(const Rational& a, const Rational& b) { return compare(a, b) < 0; }

// Largest integer m with m*m <= n (n >= 0).
BigInt isqrt(const BigInt& n);

// Returns true and sets root when value is the square of a rational.
bool exact_rational_sqrt(const Rational& value, Rational& root);

}  // namespace vconf
