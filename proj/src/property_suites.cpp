#include "hilbert/property_suites.hpp"

#include "hilbert/plane.hpp"
#include "hilbert/sampling.hpp"

namespace hilbert {
namespace {

SuiteResult run(const std::string &name, std::uint64_t seed, int samples,
                bool (*check)(Sampler &)) {
  SuiteResult r{name, samples, 0};
  Sampler sampler(seed);
  for (int i = 0; i < samples; ++i)
    if (!check(sampler)) ++r.failures;
  return r;
}

bool ii1_symmetry(Sampler &s) {
  RatPoint a = s.point();
  RatPoint c = s.point_distinct_from(a);
  Rational t = s.unit_interval();
  RatPoint b{a.x + t * (c.x - a.x), a.y + t * (c.y - a.y)};
  return between(a, b, c) && a != b && b != c && a != c && collinear(a, b, c) &&
         between(c, b, a);
}

bool ii2_extension(Sampler &s) {
  RatPoint a = s.point();
  RatPoint c = s.point_distinct_from(a);
  return between(a, c, extend(a, c));
}

bool ii3_uniqueness(Sampler &s) {
  auto [p, q, r] = s.collinear_triple();
  int middles = (between(q, p, r) ? 1 : 0) + (between(p, q, r) ? 1 : 0) +
                (between(p, r, q) ? 1 : 0);
  // at most one by II,3; exactly one by Theorem 4
  return middles == 1;
}

bool ii4_pasch(Sampler &s) {
  RatPoint a = s.point();
  RatPoint b = s.point_distinct_from(a);
  RatPoint c = s.point_off_line(a, b);
  for (;;) {
    // a line through an interior point of AB and a point off line AB
    Rational t = s.unit_interval();
    RatPoint hit{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    RatPoint other = s.point_off_line(a, b);
    if (other == hit) continue;
    RatLine l = line_through(hit, other);
    if (l.contains(a) || l.contains(b) || l.contains(c)) continue;
    PaschResult w = pasch_witness(a, b, c, l);
    return w == PaschResult::crosses_AC || w == PaschResult::crosses_BC;
  }
}

bool theorem3(Sampler &s) {
  RatPoint a = s.point();
  RatPoint c = s.point_distinct_from(a);
  RatPoint e = s.point_off_line(a, c);
  RatPoint d = theorem3_point(a, c, e);
  return between(a, d, c);
}

}  // namespace

std::vector<SuiteResult> run_plane_suites(std::uint64_t seed, int samples) {
  return {
      run("II,1 symmetry", seed, samples, ii1_symmetry),
      run("II,2 extension", seed + 1, samples, ii2_extension),
      run("II,3 uniqueness", seed + 2, samples, ii3_uniqueness),
      run("II,4 Pasch crossing", seed + 3, samples, ii4_pasch),
      run("Theorem 3 construction", seed + 4, samples, theorem3),
  };
}

}  // namespace hilbert
