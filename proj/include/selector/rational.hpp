#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "selector/error.hpp"

namespace selector {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline Rational rat(long long num, long long den = 1) { return Rational(num, den); }

// C(n,k) as a big integer; 0 outside the triangle.
inline Int binomial(int n, int k) {
  if (k < 0 || k > n) return Int(0);
  if (k > n - k) k = n - k;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Rational pow_rat(const Rational& base, unsigned e) {
  Rational r = 1, b = base;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline int sign_of(const Rational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

// Canonical "num/den" text, denominator always explicit and positive.
inline std::string rational_to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

// Accepts "a/b", integers, and decimal/scientific literals ("0.25", "1e-12"),
// all converted exactly.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) fail(errc::parse_error, "empty rational literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    try {
      Int num(text.substr(0, slash));
      Int den(text.substr(slash + 1));
      if (den == 0) fail(errc::parse_error, "zero denominator in '" + text + "'");
      return Rational(num, den);
    } catch (const selector_error&) {
      throw;
    } catch (...) {
      fail(errc::parse_error, "bad rational literal '" + text + "'");
    }
  }
  // Decimal form: sign, digits, optional fraction, optional exponent.
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
  Int mant = 0;
  long frac_digits = 0;
  bool any = false, dot = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (c >= '0' && c <= '9') {
      mant = mant * 10 + (c - '0');
      if (dot) ++frac_digits;
      any = true;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  long expo = 0;
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) eneg = text[i++] == '-';
    bool edig = false;
    for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
      expo = expo * 10 + (text[i] - '0');
      edig = true;
    }
    if (!edig) fail(errc::parse_error, "bad exponent in '" + text + "'");
    if (eneg) expo = -expo;
  }
  if (!any || i != text.size())
    fail(errc::parse_error, "bad rational literal '" + text + "'");
  long net = expo - frac_digits;
  Rational r(mant);
  Int ten = 10;
  if (net > 0)
    r *= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(net)));
  else if (net < 0)
    r /= Rational(boost::multiprecision::pow(ten, static_cast<unsigned>(-net)));
  if (neg) r = -r;
  return r;
}

}  // namespace selector
