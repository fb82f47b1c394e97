#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "hilbert/plane.hpp"

namespace hilbert {

/// The supplied betweenness oracle contradicts the order axioms on the
/// given inputs (e.g. two middles among three points).
struct oracle_fault : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Of three distinct collinear points, the unique one between the other
/// two (Theorem 4; unique by II,3). Throws degenerate_input on repeated or
/// non-collinear input.
RatPoint middle_of_three(const RatPoint &p, const RatPoint &q, const RatPoint &r);

// Both valid labelings of a collinear point set: a sequence in which every
// point lies between any two that straddle it, and its reversal (by
// Theorem 6 there are no others).
struct OrderingResult {
  std::vector<RatPoint> labels;
  std::vector<RatPoint> reversed;
};

using BetweenOracle = std::function<bool(std::size_t, std::size_t, std::size_t)>;

/// Orders n >= 2 items on a line consulting only the oracle, where
/// oracle(i, j, k) answers "does item j lie strictly between items i and
/// k". Items are identified by index, so the ordering logic never sees
/// coordinates. Anchors the first two items, classifies the rest relative
/// to them, and comparison-sorts; the full ordering condition is
/// re-verified over all triples before returning. Returns one of the two
/// valid labelings: the one whose first element has the smaller input
/// index. Throws oracle_fault on inconsistent answers.
std::vector<std::size_t> order_indices(std::size_t n, const BetweenOracle &oracle);

/// order_indices applied to concrete rational points with the analytic
/// betweenness predicate. Points must be >= 2, pairwise distinct and
/// collinear.
OrderingResult order_collinear(const std::vector<RatPoint> &points);

/// Theorem 5 condition on a candidate labeling A, B, C, D of four
/// collinear points: B between A,C and A,D; C between A,D and B,D.
bool verify_theorem5(const RatPoint &a, const RatPoint &b, const RatPoint &c,
                     const RatPoint &d);

}  // namespace hilbert
