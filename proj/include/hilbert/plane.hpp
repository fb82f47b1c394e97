#pragma once

#include <optional>
#include <stdexcept>

#include "hilbert/rational.hpp"

namespace hilbert {

/// Raised when an operation is handed geometrically degenerate input
/// (coincident points, collinear triangle, ...).
struct degenerate_input : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Line a*x + b*y + c = 0, normalized so the first nonzero of (a, b) is 1.
// Normalization makes the representation unique per locus, so operator==
// is line equality.
struct RatLine {
  Rational a;
  Rational b;
  Rational c;

  friend bool operator==(const RatLine &, const RatLine &) = default;

  bool contains(const RatPoint &p) const { return a * p.x + b * p.y + c == 0; }
};

/// The unique normalized line through two distinct points.
/// Throws degenerate_input if P == Q.
RatLine line_through(const RatPoint &p, const RatPoint &q);

/// Common point of two lines; nullopt when parallel or identical.
std::optional<RatPoint> intersect(const RatLine &l1, const RatLine &l2);

bool parallel_or_equal(const RatLine &l1, const RatLine &l2);

bool collinear(const RatPoint &p, const RatPoint &q, const RatPoint &r);

/// Strict betweenness: true iff A, B, C are pairwise distinct, collinear,
/// and B = A + t*(C - A) with 0 < t < 1.
bool between(const RatPoint &a, const RatPoint &b, const RatPoint &c);

/// The segment-extension witness of axiom II,2: a point B with C between
/// A and B. Doubles the segment (B = C + (C - A)) so the output is
/// canonical. Throws degenerate_input if A == C.
RatPoint extend(const RatPoint &a, const RatPoint &c);

/// Synthetic construction of a point strictly between A and C (Theorem 3),
/// driven only by extension and line intersection. E supplies the needed
/// off-line auxiliary point and must not be collinear with A and C.
RatPoint theorem3_point(const RatPoint &a, const RatPoint &c, const RatPoint &e);

enum class PaschResult { crosses_AC, crosses_BC, none_applicable };

/// Axiom II,4 check: given a non-degenerate triangle ABC and a line l
/// through none of its vertices, reports which second side l crosses when
/// it meets the open segment AB. Throws degenerate_input on a collinear
/// triangle or a line through a vertex.
PaschResult pasch_witness(const RatPoint &a, const RatPoint &b, const RatPoint &c,
                          const RatLine &l);

/// Exact crossing point of a line with the open segment PQ, if any.
std::optional<RatPoint> segment_crossing(const RatLine &l, const RatPoint &p,
                                         const RatPoint &q);

}  // namespace hilbert
