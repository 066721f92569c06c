#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace dp5 {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numer(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denom(const Rational& r) { return boost::multiprecision::denominator(r); }
inline bool is_integral(const Rational& r) { return denom(r) == 1; }

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer floor(const Rational& r);

/// "p/q" or "p"; throws std::invalid_argument.
Rational parse_rational(std::string_view s);
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

long to_long(const Integer& z);

}  // namespace dp5
