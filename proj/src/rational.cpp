#include "hilbert/rational.hpp"

#include <cctype>

namespace hilbert {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<BigInt> parse_integer(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  bool negative = false;
  if (s.front() == '-' || s.front() == '+') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return std::nullopt;
  BigInt value = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return negative ? -value : value;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_integer(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto num = parse_integer(text.substr(0, slash));
  auto den = parse_integer(text.substr(slash + 1));
  if (!num || !den || *den == 0) return std::nullopt;
  return Rational(*num, *den);
}

std::optional<RatPoint> parse_point(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') return std::nullopt;
  text = text.substr(1, text.size() - 2);
  auto comma = text.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto x = parse_rational(text.substr(0, comma));
  auto y = parse_rational(text.substr(comma + 1));
  if (!x || !y) return std::nullopt;
  return RatPoint{*x, *y};
}

std::string to_string(const Rational &q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += '/';
    s += denominator(q).str();
  }
  return s;
}

std::string to_string(const RatPoint &p) {
  return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
}

}  // namespace hilbert
