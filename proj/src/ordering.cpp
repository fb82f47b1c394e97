#include "hilbert/ordering.hpp"

#include <algorithm>
#include <numeric>

namespace hilbert {

RatPoint middle_of_three(const RatPoint &p, const RatPoint &q, const RatPoint &r) {
  if (p == q || q == r || p == r)
    throw degenerate_input("middle_of_three: points must be distinct");
  if (!collinear(p, q, r))
    throw degenerate_input("middle_of_three: points must be collinear");
  if (between(q, p, r)) return p;
  if (between(p, q, r)) return q;
  if (between(p, r, q)) return r;
  // Theorem 4: one of the three placements must hold
  throw std::logic_error("middle_of_three: no middle among collinear points");
}

namespace {

// position of an item relative to the anchor pair (u, v):
// 0 = strictly before u, 1 = u, 2 = between, 3 = v, 4 = strictly after v
int region(std::size_t x, std::size_t u, std::size_t v, const BetweenOracle &oracle) {
  if (x == u) return 1;
  if (x == v) return 3;
  int hits = 0, r = -1;
  if (oracle(x, u, v)) { ++hits; r = 0; }
  if (oracle(u, x, v)) { ++hits; r = 2; }
  if (oracle(u, v, x)) { ++hits; r = 4; }
  if (hits != 1) throw oracle_fault("oracle places a point in " + std::to_string(hits) +
                                    " positions relative to the anchors");
  return r;
}

}  // namespace

std::vector<std::size_t> order_indices(std::size_t n, const BetweenOracle &oracle) {
  if (n < 2) throw degenerate_input("order_indices: need at least two items");
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  if (n > 2) {
    const std::size_t u = 0, v = 1;
    std::vector<int> reg(n);
    for (std::size_t i = 0; i < n; ++i) reg[i] = region(i, u, v, oracle);
    auto less = [&](std::size_t x, std::size_t y) {
      if (reg[x] != reg[y]) return reg[x] < reg[y];
      // same open region; orient by which is nearer the region's inner end
      switch (reg[x]) {
        case 0: return oracle(x, y, u);  // y between x and u => x is first
        case 2: return oracle(u, x, y);
        case 4: return oracle(v, x, y);
        default: throw oracle_fault("oracle reports two items at an anchor position");
      }
    };
    std::sort(idx.begin(), idx.end(), less);
    // verify the Theorem 6 condition for every triple before trusting the sort
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k)
          if (!oracle(idx[i], idx[j], idx[k]))
            throw oracle_fault("sorted sequence violates betweenness on a triple");
  }
  if (idx.front() > idx.back()) std::reverse(idx.begin(), idx.end());
  return idx;
}

OrderingResult order_collinear(const std::vector<RatPoint> &points) {
  if (points.size() < 2) throw degenerate_input("order_collinear: need at least two points");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw degenerate_input("order_collinear: points must be pairwise distinct");
  for (std::size_t i = 2; i < points.size(); ++i)
    if (!collinear(points[0], points[1], points[i]))
      throw degenerate_input("order_collinear: points must be collinear");

  auto order = order_indices(points.size(), [&](std::size_t i, std::size_t j, std::size_t k) {
    return between(points[i], points[j], points[k]);
  });
  OrderingResult result;
  for (std::size_t i : order) result.labels.push_back(points[i]);
  result.reversed.assign(result.labels.rbegin(), result.labels.rend());
  return result;
}

bool verify_theorem5(const RatPoint &a, const RatPoint &b, const RatPoint &c,
                     const RatPoint &d) {
  return between(a, b, c) && between(a, b, d) && between(a, c, d) && between(b, c, d);
}

}  // namespace hilbert
