#include "hilbert/plane.hpp"

namespace hilbert {
namespace {

RatLine normalize(Rational a, Rational b, Rational c) {
  if (a != 0) {
    return RatLine{1, b / a, c / a};
  }
  // a == 0, b != 0 for any valid line
  return RatLine{0, 1, c / b};
}

}  // namespace

RatLine line_through(const RatPoint &p, const RatPoint &q) {
  if (p == q) throw degenerate_input("line_through: points coincide");
  // (y2-y1)*x - (x2-x1)*y + (x2*y1 - y2*x1) = 0
  Rational a = q.y - p.y;
  Rational b = p.x - q.x;
  Rational c = q.x * p.y - q.y * p.x;
  return normalize(a, b, c);
}

bool parallel_or_equal(const RatLine &l1, const RatLine &l2) {
  return l1.a * l2.b - l1.b * l2.a == 0;
}

std::optional<RatPoint> intersect(const RatLine &l1, const RatLine &l2) {
  Rational det = l1.a * l2.b - l1.b * l2.a;
  if (det == 0) return std::nullopt;
  Rational x = (l1.b * l2.c - l2.b * l1.c) / det;
  Rational y = (l2.a * l1.c - l1.a * l2.c) / det;
  return RatPoint{x, y};
}

bool collinear(const RatPoint &p, const RatPoint &q, const RatPoint &r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x) == 0;
}

bool between(const RatPoint &a, const RatPoint &b, const RatPoint &c) {
  if (a == b || b == c || a == c) return false;
  if (!collinear(a, b, c)) return false;
  // b = a + t*(c - a); read t off a nonzero coordinate of c - a.
  Rational dx = c.x - a.x;
  Rational t;
  if (dx != 0)
    t = (b.x - a.x) / dx;
  else
    t = (b.y - a.y) / (c.y - a.y);
  return t > 0 && t < 1;
}

RatPoint extend(const RatPoint &a, const RatPoint &c) {
  if (a == c) throw degenerate_input("extend: points coincide");
  return RatPoint{c.x + (c.x - a.x), c.y + (c.y - a.y)};
}

RatPoint theorem3_point(const RatPoint &a, const RatPoint &c, const RatPoint &e) {
  if (a == c) throw degenerate_input("theorem3_point: endpoints coincide");
  if (collinear(a, c, e)) throw degenerate_input("theorem3_point: E collinear with A and C");
  RatPoint f = extend(a, e);  // E between A and F
  RatPoint g = extend(f, c);  // C between F and G
  auto d = intersect(line_through(e, g), line_through(a, c));
  if (!d || !between(a, *d, c)) {
    // unreachable for valid inputs; guarded so a bug cannot return garbage
    throw std::logic_error("theorem3_point: construction postcondition failed");
  }
  return *d;
}

std::optional<RatPoint> segment_crossing(const RatLine &l, const RatPoint &p,
                                         const RatPoint &q) {
  auto x = intersect(l, line_through(p, q));
  if (x && between(p, *x, q)) return x;
  return std::nullopt;
}

PaschResult pasch_witness(const RatPoint &a, const RatPoint &b, const RatPoint &c,
                          const RatLine &l) {
  if (collinear(a, b, c)) throw degenerate_input("pasch_witness: collinear triangle");
  if (l.contains(a) || l.contains(b) || l.contains(c))
    throw degenerate_input("pasch_witness: line passes through a vertex");
  if (!segment_crossing(l, a, b)) return PaschResult::none_applicable;
  if (segment_crossing(l, a, c)) return PaschResult::crosses_AC;
  if (segment_crossing(l, b, c)) return PaschResult::crosses_BC;
  // II,4 guarantees a second crossing in this model; reaching here is a bug
  throw std::logic_error("pasch_witness: no exit side found");
}

}  // namespace hilbert
