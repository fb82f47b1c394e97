#include "hilbert/sampling.hpp"

#include "hilbert/plane.hpp"

namespace hilbert {

Rational Sampler::rational() {
  std::uniform_int_distribution<int> num(-1000, 1000);
  std::uniform_int_distribution<int> den(1, 1000);
  return Rational(num(rng_), den(rng_));
}

Rational Sampler::unit_interval() {
  std::uniform_int_distribution<int> den(2, 1000);
  int d = den(rng_);
  std::uniform_int_distribution<int> num(1, d - 1);
  return Rational(num(rng_), d);
}

RatPoint Sampler::point() { return RatPoint{rational(), rational()}; }

RatPoint Sampler::point_distinct_from(const RatPoint &p) {
  for (;;) {
    RatPoint q = point();
    if (q != p) return q;
  }
}

RatPoint Sampler::point_off_line(const RatPoint &p, const RatPoint &q) {
  for (;;) {
    RatPoint r = point();
    if (!collinear(p, q, r)) return r;
  }
}

std::array<RatPoint, 3> Sampler::collinear_triple() {
  RatPoint origin = point();
  RatPoint tip = point_distinct_from(origin);
  Rational dx = tip.x - origin.x, dy = tip.y - origin.y;
  for (;;) {
    Rational t1 = rational(), t2 = rational(), t3 = rational();
    if (t1 == t2 || t2 == t3 || t1 == t3) continue;
    auto at = [&](const Rational &t) {
      return RatPoint{origin.x + t * dx, origin.y + t * dy};
    };
    return {at(t1), at(t2), at(t3)};
  }
}

Diagram Sampler::diagram() {
  RatPoint a = point();
  RatPoint zero = point_distinct_from(a);
  RatPoint b;
  for (;;) {
    b = point();
    if (!collinear(a, b, zero) && b != a) break;
  }
  // C beyond B on ray A->B, D beyond zero on ray C->zero
  Rational t = unit_interval();
  RatPoint c{b.x + t * (b.x - a.x), b.y + t * (b.y - a.y)};
  Rational u = unit_interval();
  RatPoint d{zero.x + u * (zero.x - c.x), zero.y + u * (zero.y - c.y)};
  return make_diagram(a, b, c, d, zero, zero);
}

}  // namespace hilbert
