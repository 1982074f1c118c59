#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace gmetric {

/// Exact rational number. All distances, potentials and radii use this type.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses "p", "-p", "p/q", decimals such as "0.25" and scientific forms such
/// as "1e-6". The result is exact; "1/0" and garbage raise RationalParseError.
Rational parse_rational(std::string_view text);

/// Canonical lowest-terms form: "p" for integers, "p/q" with q > 0 otherwise.
std::string to_string(const Rational& value);

/// Lossy conversion for display only.
double to_double(const Rational& value);

inline Rational make_rational(long long num, long long den = 1) { return Rational(num, den); }

}  // namespace gmetric
