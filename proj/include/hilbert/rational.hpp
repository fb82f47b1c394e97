#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace hilbert {

// Exact arbitrary-precision rational scalar. boost keeps the canonical
// form (positive denominator, gcd(num, den) = 1) for us.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct RatPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RatPoint &, const RatPoint &) = default;
};

/// Parses "p/q" or "p" (q > 0 after normalization). Returns nullopt on
/// malformed input, including "p/0".
std::optional<Rational> parse_rational(std::string_view text);

/// Parses "(x,y)" with rational components; whitespace around tokens is
/// tolerated.
std::optional<RatPoint> parse_point(std::string_view text);

std::string to_string(const Rational &q);
std::string to_string(const RatPoint &p);

}  // namespace hilbert
