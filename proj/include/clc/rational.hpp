#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace clc {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline std::string_view trim(std::string_view s) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

inline bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

inline std::optional<Integer> parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) return std::nullopt;
  Integer value{std::string(s)};
  return negative ? Integer(-value) : value;
}

inline Integer pow10(unsigned exponent) {
  Integer r = 1;
  for (unsigned i = 0; i < exponent; ++i) r *= 10;
  return r;
}

}  // namespace detail

/// Parses "7", "-3", "2.5", ".25" or "p/q" (q > 0). Surrounding whitespace is ignored.
inline std::optional<Rational> parse_rational(std::string_view text) {
  text = detail::trim(text);
  if (text.empty()) return std::nullopt;

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = detail::parse_integer(detail::trim(text.substr(0, slash)));
    auto den_text = detail::trim(text.substr(slash + 1));
    if (!num || !detail::all_digits(den_text)) return std::nullopt;
    Integer den{std::string(den_text)};
    if (den == 0) return std::nullopt;
    return Rational(*num, den);
  }

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() && frac.empty()) return std::nullopt;
  if (!whole.empty() && !detail::all_digits(whole)) return std::nullopt;
  if (dot != std::string_view::npos && !frac.empty() && !detail::all_digits(frac)) return std::nullopt;
  if (dot != std::string_view::npos && whole.empty() && frac.empty()) return std::nullopt;

  Integer num = whole.empty() ? Integer(0) : Integer(std::string(whole));
  Integer den = detail::pow10(static_cast<unsigned>(frac.size()));
  if (!frac.empty()) num = num * den + Integer(std::string(frac));
  Rational value(num, den);
  return negative ? Rational(-value) : value;
}

/// Exact rendering, always "p/q" (integers become "k/1").
inline std::string to_exact_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

/// Fixed-point rendering with `digits` decimals, rounding half to even.
inline std::string to_decimal_string(const Rational& value, int digits) {
  digits = std::max(digits, 0);
  Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;

  Integer scaled = num * detail::pow10(static_cast<unsigned>(digits));
  Integer q = scaled / den;
  Integer twice_rem = 2 * (scaled % den);
  if (twice_rem > den || (twice_rem == den && (q % 2) == 1)) ++q;

  std::string text = q.str();
  if (digits > 0) {
    if (text.size() <= static_cast<std::size_t>(digits))
      text.insert(0, static_cast<std::size_t>(digits) + 1 - text.size(), '0');
    text.insert(text.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && q != 0) text.insert(0, "-");
  return text;
}

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace clc
