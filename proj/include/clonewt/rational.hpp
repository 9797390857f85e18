#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace clonewt {

using Rational = boost::multiprecision::cpp_rational;

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);

// Parses "p/q", an integer, or a plain decimal ("0.25", "-1.5e-3").
Rational parse_rational(std::string_view text);

// The rational spelled by the shortest decimal that round-trips to `x`.
// 0.4 maps to 2/5, not to the binary expansion of the nearest double.
Rational decimal_rational(double x);

// Shortest decimal spelling that round-trips to `x`.
std::string shortest(double x);

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace clonewt
