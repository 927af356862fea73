// Copyright 2026 The forbid Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FORBID_NUMERIC_HPP
#define FORBID_NUMERIC_HPP

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "forbid/errors.hpp"

namespace forbid {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
/// 50 significant decimal digits.
using Real = boost::multiprecision::cpp_bin_float_50;

/// Slack used whenever a floating value is compared against a bound.
inline constexpr double kFloatMargin = 1e-9;

inline BigInt ipow(BigInt base, std::uint64_t exp) {
  BigInt result = 1;
  while (exp != 0) {
    if (exp & 1U) result *= base;
    base *= base;
    exp >>= 1U;
  }
  return result;
}

inline Rational rpow(const Rational& base, std::uint64_t exp) {
  return Rational(ipow(numerator(base), exp), ipow(denominator(base), exp));
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline BigInt factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

inline BigInt floor_of(const Rational& x) {
  BigInt q = numerator(x) / denominator(x);  // truncates toward zero
  if (x < 0 && q * denominator(x) != numerator(x)) --q;
  return q;
}

inline BigInt ceil_of(const Rational& x) {
  BigInt f = floor_of(x);
  return f * denominator(x) == numerator(x) ? f : f + 1;
}

inline BigInt ceil_of(const Real& x) {
  Real c = boost::multiprecision::ceil(x);
  return c.convert_to<BigInt>();
}

inline BigInt floor_of(const Real& x) {
  Real f = boost::multiprecision::floor(x);
  return f.convert_to<BigInt>();
}

inline Real to_real(const Rational& x) {
  return Real(numerator(x)) / Real(denominator(x));
}

inline Real to_real(const BigInt& x) { return Real(x); }

inline double to_double(const Rational& x) { return to_real(x).convert_to<double>(); }

/// floor(q^x) for rational x >= 0, exact when numerator and denominator are
/// small:
/// m <= q^(a/b) iff m^b <= q^a.
inline BigInt floor_power(unsigned q, const Rational& x) {
  if (x < 0) throw DomainError("floor_power needs a nonnegative exponent");
  BigInt m = floor_of(Real(boost::multiprecision::pow(Real(q), to_real(x))));
  const BigInt a = numerator(x);
  const BigInt b = denominator(x);
  if (b > 4096 || a > 4096) return m;
  const auto av = a.convert_to<std::uint64_t>();
  const auto bv = b.convert_to<std::uint64_t>();
  const BigInt qa = ipow(BigInt(q), av);
  while (m > 0 && ipow(m, bv) > qa) --m;
  while (ipow(m + 1, bv) <= qa) ++m;
  return m;
}

inline std::string to_string(const BigInt& x) { return x.str(); }

/// "p/q" or "p" for integral values.
inline std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

inline std::string to_string(const Real& x, int digits = 20) {
  return x.str(digits, std::ios_base::fmtflags(0));
}

/// Parses "3", "-2", "1/4", "0.125" or "1e-6" into an exact rational.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw DomainError("malformed number '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();
  // Boost reads a leading 0 as octal, so strip it.
  auto decimal = [](std::string_view s) {
    const auto nz = s.find_first_not_of('0');
    return nz == std::string_view::npos ? BigInt(0) : BigInt(std::string(s.substr(nz)));
  };
  auto parse_int = [&](std::string_view s) -> BigInt {
    if (s.empty()) fail();
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) fail();
    for (std::size_t j = i; j < s.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) fail();
    return s[0] == '-' ? BigInt(-decimal(s.substr(1))) : decimal(s.substr(i));
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_int(text.substr(0, slash));
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) return fail();
    return Rational(num, den);
  }
  std::string_view mantissa = text;
  long long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    BigInt ev = parse_int(text.substr(e + 1));
    if (ev > 4000 || ev < -4000) return fail();
    exponent = ev.convert_to<long long>();
  }
  bool negative = false;
  if (!mantissa.empty() && (mantissa[0] == '-' || mantissa[0] == '+')) {
    negative = mantissa[0] == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long long frac_digits = 0;
  bool seen_dot = false;
  for (char c : mantissa) {
    if (c == '.') {
      if (seen_dot) return fail();
      seen_dot = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_dot) ++frac_digits;
    } else {
      return fail();
    }
  }
  if (digits.empty()) return fail();
  Rational value{decimal(digits)};
  long long scale = exponent - frac_digits;
  if (scale >= 0)
    value *= ipow(10, static_cast<std::uint64_t>(scale));
  else
    value /= ipow(10, static_cast<std::uint64_t>(-scale));
  return negative ? Rational(-value) : value;
}

}  // namespace forbid

#endif  // FORBID_NUMERIC_HPP
