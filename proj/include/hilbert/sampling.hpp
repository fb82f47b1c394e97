#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "hilbert/rational.hpp"
#include "hilbert/successor.hpp"

namespace hilbert {

// Seeded generators for property suites. Numerators are drawn from
// [-1000, 1000] and denominators from [1, 1000] so sampled values stay
// readable while arithmetic remains exact.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Rational rational();
  /// rational strictly inside (0, 1)
  Rational unit_interval();
  RatPoint point();
  /// a point distinct from p
  RatPoint point_distinct_from(const RatPoint &p);
  /// a point not collinear with p and q (p != q)
  RatPoint point_off_line(const RatPoint &p, const RatPoint &q);
  /// three distinct collinear points
  std::array<RatPoint, 3> collinear_triple();
  /// a valid fresh diagram (N = zero)
  Diagram diagram();

  std::mt19937_64 &rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline constexpr std::uint64_t kDefaultSeed = 1899;

}  // namespace hilbert
