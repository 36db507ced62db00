#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace casimir::algebra {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Rational make_rational(long long num, long long den = 1) {
  return Rational(Integer(num), Integer(den));
}

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

/// Canonical "p/q" rendering with q >= 1.
std::string to_string(const Rational& r);

/// Accepts "p", "p/q" or "-p/q"; throws InputError on anything else or q = 0.
Rational parse_rational(std::string_view text);

/// Builds p/q from separate integer tokens; throws InputError when q = 0.
Rational rational_from_parts(std::string_view num, std::string_view den);

}  // namespace casimir::algebra
