#include "hilbert/model_finder.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "hilbert/axioms.hpp"

namespace hilbert {

void SearchBounds::check() const {
  if (max_points < 0 || max_lines < 0 || max_planes < 0)
    throw bounds_error("search bounds must be nonnegative");
  if (max_points > cap_points || max_lines > cap_lines || max_planes > cap_planes)
    throw bounds_error("search bounds exceed the hard caps (" +
                       std::to_string(cap_points) + " points, " +
                       std::to_string(cap_lines) + " lines, " +
                       std::to_string(cap_planes) + " planes)");
}

namespace {

using Mask = unsigned;

// Extensional candidate: lines and planes are point subsets (bitmasks).
struct Candidate {
  int n = 0;
  std::vector<Mask> lines;   // sorted masks, popcount >= 2
  std::vector<Mask> planes;  // sorted masks, popcount >= 3
};

Mask apply_perm(Mask m, const std::vector<int> &perm) {
  Mask out = 0;
  for (int i = 0; i < static_cast<int>(perm.size()); ++i)
    if (m & (1u << i)) out |= 1u << perm[i];
  return out;
}

std::pair<std::vector<Mask>, std::vector<Mask>> relabel(const Candidate &c,
                                                        const std::vector<int> &perm) {
  std::vector<Mask> ls, ps;
  ls.reserve(c.lines.size());
  ps.reserve(c.planes.size());
  for (Mask m : c.lines) ls.push_back(apply_perm(m, perm));
  for (Mask m : c.planes) ps.push_back(apply_perm(m, perm));
  std::sort(ls.begin(), ls.end());
  std::sort(ps.begin(), ps.end());
  return {std::move(ls), std::move(ps)};
}

// Lexicographically least labeling over all point permutations.
Candidate canonical_form(const Candidate &c) {
  std::vector<int> perm(c.n);
  std::iota(perm.begin(), perm.end(), 0);
  auto best = relabel(c, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    auto cur = relabel(c, perm);
    if (cur < best) best = std::move(cur);
  }
  return Candidate{c.n, std::move(best.first), std::move(best.second)};
}

bool is_canonical(const Candidate &c) {
  auto canon = canonical_form(c);
  return canon.lines == c.lines && canon.planes == c.planes;
}

FiniteIncidenceStructure to_structure(const Candidate &c) {
  FiniteIncidenceStructure s;
  for (int i = 0; i < c.n; ++i) s.points.push_back("P" + std::to_string(i + 1));
  for (std::size_t l = 0; l < c.lines.size(); ++l) {
    std::string name = "L" + std::to_string(l + 1);
    s.lines.push_back(name);
    for (int i = 0; i < c.n; ++i)
      if (c.lines[l] & (1u << i)) s.on_line.insert({s.points[i], name});
  }
  for (std::size_t q = 0; q < c.planes.size(); ++q) {
    std::string name = "Q" + std::to_string(q + 1);
    s.planes.push_back(name);
    for (int i = 0; i < c.n; ++i)
      if (c.planes[q] & (1u << i)) s.on_plane.insert({s.points[i], name});
  }
  return s;
}

std::vector<Mask> subsets_of_size_at_least(int n, int k) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (1u << n); ++m)
    if (std::popcount(m) >= k) out.push_back(m);
  return out;
}

// Enumerates all subsets of `pool` of size <= limit, in index order.
void choose_up_to(const std::vector<Mask> &pool, int limit,
                  const std::function<void(const std::vector<Mask> &)> &yield) {
  std::vector<Mask> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    yield(chosen);
    if (static_cast<int>(chosen.size()) == limit) return;
    for (std::size_t i = idx; i < pool.size(); ++i) {
      chosen.push_back(pool[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
}

bool all_hold(const std::vector<AxiomReport> &reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const AxiomReport &r) { return r.verdict == Verdict::holds; });
}

}  // namespace

void enumerate_candidates(const SearchBounds &bounds,
                          const std::function<void(const FiniteIncidenceStructure &)> &yield) {
  bounds.check();
  for (int n = 0; n <= bounds.max_points; ++n) {
    auto line_pool = subsets_of_size_at_least(n, 2);
    auto plane_pool = subsets_of_size_at_least(n, 3);
    choose_up_to(line_pool, bounds.max_lines, [&](const std::vector<Mask> &lines) {
      choose_up_to(plane_pool, bounds.max_planes, [&](const std::vector<Mask> &planes) {
        Candidate c{n, lines, planes};
        if (is_canonical(c)) yield(to_structure(c));
      });
    });
  }
}

namespace {

// Exact-cover enumeration used by find_minimum. A Group I model must cover
// every point pair by exactly one line (I,1 + I,2) and every non-collinear
// triple by exactly one plane (I,4 + I,5); these necessary conditions
// prune the search. Survivors are still re-checked in full.
struct MinimumSearch {
  const SearchBounds &bounds;
  std::uint64_t examined = 0;
  std::map<std::pair<std::vector<Mask>, std::vector<Mask>>, FiniteIncidenceStructure> classes;
  int n = 0;
  std::vector<Mask> line_pool, plane_pool;
  std::vector<std::pair<int, int>> pairs;
  std::vector<Mask> triples;  // 3-subsets as masks

  explicit MinimumSearch(const SearchBounds &b) : bounds(b) {}

  void run() {
    for (n = 0; n <= bounds.max_points; ++n) {
      line_pool = subsets_of_size_at_least(n, 2);
      plane_pool = subsets_of_size_at_least(n, 3);
      pairs.clear();
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
      triples.clear();
      for (Mask m = 0; m < (1u << n); ++m)
        if (std::popcount(m) == 3) triples.push_back(m);
      std::vector<Mask> lines;
      cover_pairs(lines, std::vector<bool>(pairs.size(), false));
    }
  }

  void cover_pairs(std::vector<Mask> &lines, std::vector<bool> covered) {
    auto next = std::find(covered.begin(), covered.end(), false);
    if (next == covered.end()) {
      expand_planes(lines);
      return;
    }
    if (static_cast<int>(lines.size()) == bounds.max_lines) return;
    std::size_t target = next - covered.begin();
    Mask pair_mask = (1u << pairs[target].first) | (1u << pairs[target].second);
    for (Mask line : line_pool) {
      if ((line & pair_mask) != pair_mask) continue;
      // no pair may end up on two lines
      bool clash = false;
      auto with = covered;
      for (std::size_t p = 0; p < pairs.size() && !clash; ++p) {
        Mask pm = (1u << pairs[p].first) | (1u << pairs[p].second);
        if ((line & pm) == pm) {
          if (covered[p]) clash = true;
          with[p] = true;
        }
      }
      if (clash) continue;
      lines.push_back(line);
      cover_pairs(lines, with);
      lines.pop_back();
    }
  }

  void expand_planes(const std::vector<Mask> &lines) {
    auto on_some_line = [&](Mask triple) {
      return std::any_of(lines.begin(), lines.end(),
                         [&](Mask l) { return (l & triple) == triple; });
    };
    std::vector<Mask> noncollinear;
    for (Mask t : triples)
      if (!on_some_line(t)) noncollinear.push_back(t);
    // planes containing no non-collinear triple are unconstrained by the
    // cover; enumerate them as optional extras
    std::vector<Mask> constrained, free;
    for (Mask pl : plane_pool) {
      bool touches = std::any_of(noncollinear.begin(), noncollinear.end(),
                                 [&](Mask t) { return (pl & t) == t; });
      (touches ? constrained : free).push_back(pl);
    }
    std::vector<Mask> planes;
    cover_triples(lines, noncollinear, constrained, free, planes,
                  std::vector<bool>(noncollinear.size(), false));
  }

  void cover_triples(const std::vector<Mask> &lines, const std::vector<Mask> &noncollinear,
                     const std::vector<Mask> &constrained, const std::vector<Mask> &free,
                     std::vector<Mask> &planes, std::vector<bool> covered) {
    auto next = std::find(covered.begin(), covered.end(), false);
    if (next == covered.end()) {
      int room = bounds.max_planes - static_cast<int>(planes.size());
      choose_up_to(free, room, [&](const std::vector<Mask> &extra) {
        std::vector<Mask> all = planes;
        all.insert(all.end(), extra.begin(), extra.end());
        std::sort(all.begin(), all.end());
        std::vector<Mask> ls = lines;
        std::sort(ls.begin(), ls.end());
        finish(Candidate{n, std::move(ls), std::move(all)});
      });
      return;
    }
    if (static_cast<int>(planes.size()) == bounds.max_planes) return;
    std::size_t target = next - covered.begin();
    for (Mask pl : constrained) {
      if ((pl & noncollinear[target]) != noncollinear[target]) continue;
      bool clash = false;
      auto with = covered;
      for (std::size_t t = 0; t < noncollinear.size() && !clash; ++t) {
        if ((pl & noncollinear[t]) == noncollinear[t]) {
          if (covered[t]) clash = true;
          with[t] = true;
        }
      }
      if (clash) continue;
      planes.push_back(pl);
      cover_triples(lines, noncollinear, constrained, free, planes, with);
      planes.pop_back();
    }
  }

  void finish(Candidate c) {
    ++examined;
    auto s = to_structure(c);
    if (!all_hold(check_group_i(s))) return;
    auto canon = canonical_form(c);
    classes.try_emplace({canon.lines, canon.planes}, to_structure(canon));
  }
};

}  // namespace

SearchOutcome find_minimum(const SearchBounds &bounds) {
  bounds.check();
  auto start = std::chrono::steady_clock::now();
  MinimumSearch search(bounds);
  search.run();

  SearchOutcome out;
  out.structures_examined = search.examined;
  out.satisfiable = !search.classes.empty();

  auto size_of = [](const FiniteIncidenceStructure &s) {
    return std::array<std::size_t, 3>{s.points.size(), s.lines.size(), s.planes.size()};
  };
  auto dominates = [](const std::array<std::size_t, 3> &a, const std::array<std::size_t, 3> &b) {
    return a != b && a[0] <= b[0] && a[1] <= b[1] && a[2] <= b[2];
  };
  for (const auto &[key, model] : search.classes) {
    bool minimal = true;
    for (const auto &[key2, other] : search.classes)
      if (dominates(size_of(other), size_of(model))) { minimal = false; break; }
    if (minimal) out.minimal_models.push_back(model);
  }
  out.elapsed = std::chrono::steady_clock::now() - start;
  return out;
}

bool isomorphic(const FiniteIncidenceStructure &s1, const FiniteIncidenceStructure &s2) {
  s1.validate();
  s2.validate();
  if (s1.points.size() != s2.points.size() || s1.lines.size() != s2.lines.size() ||
      s1.planes.size() != s2.planes.size() || s1.on_line.size() != s2.on_line.size() ||
      s1.on_plane.size() != s2.on_plane.size())
    return false;

  auto index_of = [](const std::vector<std::string> &v, const std::string &n) {
    return static_cast<int>(std::find(v.begin(), v.end(), n) - v.begin());
  };
  auto incidence_sets = [&](const FiniteIncidenceStructure &s,
                            const std::set<std::pair<std::string, std::string>> &pairs,
                            const std::vector<std::string> &carriers) {
    std::vector<std::vector<int>> out(carriers.size());
    for (const auto &[p, c] : pairs)
      out[index_of(carriers, c)].push_back(index_of(s.points, p));
    for (auto &v : out) std::sort(v.begin(), v.end());
    std::sort(out.begin(), out.end());
    return out;  // sorted multiset of carrier point-sets
  };
  auto degrees = [&](const FiniteIncidenceStructure &s) {
    std::vector<std::pair<int, int>> deg(s.points.size(), {0, 0});
    for (const auto &[p, l] : s.on_line) deg[index_of(s.points, p)].first++;
    for (const auto &[p, q] : s.on_plane) deg[index_of(s.points, p)].second++;
    return deg;
  };

  const auto deg1 = degrees(s1);
  const auto deg2 = degrees(s2);
  const int np = static_cast<int>(s1.points.size());
  std::vector<int> map(np, -1);
  std::vector<bool> used(np, false);

  auto lines2 = incidence_sets(s2, s2.on_line, s2.lines);
  auto planes2 = incidence_sets(s2, s2.on_plane, s2.planes);

  std::function<bool(int)> assign = [&](int i) -> bool {
    if (i == np) {
      auto remap = [&](std::vector<std::vector<int>> sets) {
        for (auto &set : sets) {
          for (int &p : set) p = map[p];
          std::sort(set.begin(), set.end());
        }
        std::sort(sets.begin(), sets.end());
        return sets;
      };
      return remap(incidence_sets(s1, s1.on_line, s1.lines)) == lines2 &&
             remap(incidence_sets(s1, s1.on_plane, s1.planes)) == planes2;
    }
    for (int j = 0; j < np; ++j) {
      if (used[j] || deg1[i] != deg2[j]) continue;
      map[i] = j;
      used[j] = true;
      if (assign(i + 1)) return true;
      used[j] = false;
      map[i] = -1;
    }
    return false;
  };
  return assign(0);
}

}  // namespace hilbert
