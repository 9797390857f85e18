#include "clonewt/rational.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <string>

#include "clonewt/errors.hpp"

namespace clonewt {

using boost::multiprecision::cpp_int;

std::string to_string(const Rational& q) {
  const cpp_int num = boost::multiprecision::numerator(q);
  const cpp_int den = boost::multiprecision::denominator(q);
  if (den == 1) {
    return num.str();
  }
  return num.str() + "/" + den.str();
}

namespace {

cpp_int pow10(int e) {
  cpp_int p = 1;
  for (int i = 0; i < e; ++i) {
    p *= 10;
  }
  return p;
}

bool all_digits(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (c < '0' || c > '9') {
      return false;
    }
  }
  return true;
}

Rational parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw ValidationError("not an integer: '" + std::string(s) + "'");
  }
  const auto nonzero = s.find_first_not_of('0');
  const cpp_int v{nonzero == std::string_view::npos ? std::string("0") : std::string(s.substr(nonzero))};
  return negative ? Rational(-v) : Rational(v);
}

Rational parse_decimal(std::string_view s) {
  std::string text(s);
  bool negative = false;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  int exponent = 0;
  const auto e = text.find_first_of("eE", pos);
  std::string mantissa = text.substr(pos, e == std::string::npos ? std::string::npos : e - pos);
  if (e != std::string::npos) {
    const std::string exp_text = text.substr(e + 1);
    const auto* first = exp_text.data();
    const auto* last = first + exp_text.size();
    if (!exp_text.empty() && *first == '+') {
      ++first;
    }
    auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc() || ptr != last) {
      throw ValidationError("bad exponent in '" + text + "'");
    }
  }
  const auto dot = mantissa.find('.');
  std::string digits = mantissa;
  if (dot != std::string::npos) {
    digits = mantissa.substr(0, dot) + mantissa.substr(dot + 1);
    exponent -= static_cast<int>(mantissa.size() - dot - 1);
  }
  if (!all_digits(digits)) {
    throw ValidationError("not a number: '" + text + "'");
  }
  // A leading zero would make cpp_int read octal.
  const auto nonzero = digits.find_first_not_of('0');
  digits = nonzero == std::string::npos ? "0" : digits.substr(nonzero);
  Rational q{cpp_int(digits)};
  if (exponent > 0) {
    q *= pow10(exponent);
  } else if (exponent < 0) {
    q /= pow10(-exponent);
  }
  return negative ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const Rational num = parse_integer(text.substr(0, slash));
    const Rational den = parse_integer(text.substr(slash + 1));
    if (den == 0) {
      throw ValidationError("zero denominator in '" + std::string(text) + "'");
    }
    return num / den;
  }
  return parse_decimal(text);
}

std::string shortest(double x) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) {
    throw ValidationError("cannot format double");
  }
  return std::string(buf.data(), static_cast<std::size_t>(ptr - buf.data()));
}

Rational decimal_rational(double x) {
  if (!std::isfinite(x)) {
    throw ValidationError("non-finite value has no rational form");
  }
  return parse_decimal(shortest(x));
}

}  // namespace clonewt
