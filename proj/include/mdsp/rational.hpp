// Copyright 2026 The mdsp authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "mdsp/errors.hpp"

namespace mdsp {

// All scalar quantities in the library are exact rationals; no floating point
// enters any computation. The backend keeps values in canonical reduced form
// (positive denominator, gcd 1). Expression templates are off so arithmetic
// yields plain values that compose with std::min/max and comparisons.
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;
using Integer = boost::multiprecision::cpp_int;

inline Integer rat_num(const Rational& r) { return numerator(r); }
inline Integer rat_den(const Rational& r) { return denominator(r); }

/// Canonical "p/q" rendering, e.g. "6/1", "-3/2". Round-trips through
/// parse_rational for every value.
inline std::string to_fraction_string(const Rational& r) {
  return rat_num(r).str() + "/" + rat_den(r).str();
}

namespace detail {

inline bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  // Strip leading zeros: cpp_int's string constructor would read them as an
  // octal prefix.
  while (i + 1 < s.size() && s[i] == '0') ++i;
  out = Integer(std::string(s.substr(i)));
  if (negative) out = -out;
  return true;
}

}  // namespace detail

/// Parses "p/q", an integer, or a plain decimal string ("13.5" becomes 27/2,
/// exactly). Anything else is a parse_error.
inline Rational parse_rational(std::string_view text) {
  // trim
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) throw Error(errc::parse_error, "empty rational literal");

  const std::size_t slash = text.find('/');
  if (slash != std::string_view::npos) {
    Integer num, den;
    if (!detail::parse_integer(text.substr(0, slash), num) ||
        !detail::parse_integer(text.substr(slash + 1), den) || den == 0) {
      throw Error(errc::parse_error,
                  "bad fraction literal '" + std::string(text) + "'");
    }
    return Rational(num, den);
  }

  const std::size_t dot = text.find('.');
  if (dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole[0] == '+' || whole[0] == '-')) {
      negative = whole[0] == '-';
      whole.remove_prefix(1);
    }
    if (frac.empty() && whole.empty())
      throw Error(errc::parse_error, "bad decimal literal '" + std::string(text) + "'");
    Integer ipart = 0, fpart = 0;
    if (!whole.empty() && !detail::parse_integer(whole, ipart))
      throw Error(errc::parse_error, "bad decimal literal '" + std::string(text) + "'");
    if (!frac.empty() && !detail::parse_integer(frac, fpart))
      throw Error(errc::parse_error, "bad decimal literal '" + std::string(text) + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer num = ipart * scale + fpart;
    if (negative) num = -num;
    return Rational(num, scale);
  }

  Integer value;
  if (!detail::parse_integer(text, value))
    throw Error(errc::parse_error, "bad rational literal '" + std::string(text) + "'");
  return Rational(value);
}

/// True when the value has a terminating decimal expansion (denominator of the
/// form 2^a * 5^b).
inline bool has_terminating_decimal(const Rational& r) {
  Integer d = rat_den(r);
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  return d == 1;
}

/// Human-oriented decimal rendering. Exact when the expansion terminates
/// ("27/2" -> "13.5", "6/1" -> "6"); otherwise rounded to `digits` places and
/// prefixed with '~' to flag the approximation. Display-only: canonical
/// serialization always uses to_fraction_string.
inline std::string to_decimal_string(const Rational& r, unsigned digits = 6) {
  const bool negative = r < 0;
  const Rational a = negative ? Rational(-r) : r;
  Integer num = rat_num(a);
  Integer den = rat_den(a);

  if (has_terminating_decimal(a)) {
    unsigned twos = 0, fives = 0;
    Integer d = den;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    const unsigned places = twos > fives ? twos : fives;
    Integer scaled = num;
    for (unsigned i = 0; i < places - twos; ++i) scaled *= 2;
    for (unsigned i = 0; i < places - fives; ++i) scaled *= 5;
    std::string s = scaled.str();
    std::string out;
    if (places == 0) {
      out = s;
    } else {
      while (s.size() <= places) s.insert(s.begin(), '0');
      out = s.substr(0, s.size() - places) + "." + s.substr(s.size() - places);
      while (out.back() == '0') out.pop_back();
      if (out.back() == '.') out.pop_back();
    }
    return negative ? "-" + out : out;
  }

  Integer scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  Integer rounded = (num * scale + den / 2) / den;
  std::string s = rounded.str();
  while (s.size() <= digits) s.insert(s.begin(), '0');
  std::string out = s.substr(0, s.size() - digits) + "." + s.substr(s.size() - digits);
  return (negative ? "~-" : "~") + out;
}

}  // namespace mdsp
