#include "hilbert/axioms.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>

namespace hilbert {

std::string to_string(const AxiomId &id) {
  return (id.group == AxiomGroup::I ? "I," : "II,") + std::to_string(id.index);
}

namespace {

// Indexed view of a structure for enumeration.
struct View {
  std::vector<std::string> pt, ln, pn;
  std::vector<std::vector<int>> line_pts;   // per line, sorted point indices
  std::vector<std::vector<int>> plane_pts;  // per plane, sorted point indices

  explicit View(const FiniteIncidenceStructure &s) : pt(s.points), ln(s.lines), pn(s.planes) {
    auto index_of = [](const std::vector<std::string> &v, const std::string &n) {
      return static_cast<int>(std::find(v.begin(), v.end(), n) - v.begin());
    };
    line_pts.resize(ln.size());
    plane_pts.resize(pn.size());
    for (const auto &[p, l] : s.on_line)
      line_pts[index_of(ln, l)].push_back(index_of(pt, p));
    for (const auto &[p, q] : s.on_plane)
      plane_pts[index_of(pn, q)].push_back(index_of(pt, p));
    for (auto &v : line_pts) std::sort(v.begin(), v.end());
    for (auto &v : plane_pts) std::sort(v.begin(), v.end());
  }

  bool on_line(int p, int l) const {
    return std::binary_search(line_pts[l].begin(), line_pts[l].end(), p);
  }
  bool on_plane(int p, int q) const {
    return std::binary_search(plane_pts[q].begin(), plane_pts[q].end(), p);
  }
  bool collinear3(int i, int j, int k) const {
    for (std::size_t l = 0; l < ln.size(); ++l)
      if (on_line(i, l) && on_line(j, l) && on_line(k, l)) return true;
    return false;
  }
  bool plane_contains3(int q, int i, int j, int k) const {
    return on_plane(i, q) && on_plane(j, q) && on_plane(k, q);
  }
};

using Witness = std::vector<std::string>;

// Accumulates one axiom's evaluation; vacuous when no hypothesis instance
// was ever seen and no unconditional clause decided the verdict.
struct Eval {
  bool any_instance = false;
  std::optional<Witness> violation;
  std::optional<bool> forced;  // set by existential clauses (never vacuous)

  AxiomReport report(AxiomId id) const {
    if (violation) return {id, Verdict::fails, violation};
    if (forced) return *forced ? AxiomReport{id, Verdict::holds, std::nullopt}
                               : AxiomReport{id, Verdict::fails, Witness{}};
    if (!any_instance) return {id, Verdict::vacuous, std::nullopt};
    return {id, Verdict::holds, std::nullopt};
  }
};

}  // namespace

std::vector<AxiomReport> check_group_i(const FiniteIncidenceStructure &s) {
  s.validate();
  View v(s);
  const int np = static_cast<int>(v.pt.size());
  const int nl = static_cast<int>(v.ln.size());
  const int nq = static_cast<int>(v.pn.size());
  std::vector<AxiomReport> out;
  auto emit = [&](int index, const Eval &e) {
    out.push_back(e.report({AxiomGroup::I, index}));
  };

  // I,1: two distinct points lie on a common line.
  {
    Eval e;
    for (int i = 0; i < np && !e.violation; ++i)
      for (int j = i + 1; j < np && !e.violation; ++j) {
        e.any_instance = true;
        bool found = false;
        for (int l = 0; l < nl && !found; ++l)
          found = v.on_line(i, l) && v.on_line(j, l);
        if (!found) e.violation = Witness{v.pt[i], v.pt[j]};
      }
    emit(1, e);
  }

  // I,2: the line through two distinct points is unique.
  {
    Eval e;
    for (int i = 0; i < np && !e.violation; ++i)
      for (int j = i + 1; j < np && !e.violation; ++j) {
        std::vector<int> common;
        for (int l = 0; l < nl; ++l)
          if (v.on_line(i, l) && v.on_line(j, l)) common.push_back(l);
        if (!common.empty()) e.any_instance = true;
        if (common.size() > 1)
          e.violation = Witness{v.pt[i], v.pt[j], v.ln[common[0]], v.ln[common[1]]};
      }
    emit(2, e);
  }

  // I,3: every line carries at least two points; three non-collinear
  // points exist.
  {
    Eval e;
    for (int l = 0; l < nl && !e.violation; ++l)
      if (v.line_pts[l].size() < 2) e.violation = Witness{v.ln[l]};
    if (!e.violation) {
      bool found = false;
      for (int i = 0; i < np && !found; ++i)
        for (int j = i + 1; j < np && !found; ++j)
          for (int k = j + 1; k < np && !found; ++k)
            found = !v.collinear3(i, j, k);
      e.forced = found;
    }
    emit(3, e);
  }

  // I,4: three non-collinear points lie on a plane; every plane contains a
  // point.
  {
    Eval e;
    for (int i = 0; i < np && !e.violation; ++i)
      for (int j = i + 1; j < np && !e.violation; ++j)
        for (int k = j + 1; k < np && !e.violation; ++k) {
          if (v.collinear3(i, j, k)) continue;
          e.any_instance = true;
          bool found = false;
          for (int q = 0; q < nq && !found; ++q) found = v.plane_contains3(q, i, j, k);
          if (!found) e.violation = Witness{v.pt[i], v.pt[j], v.pt[k]};
        }
    for (int q = 0; q < nq && !e.violation; ++q) {
      e.any_instance = true;
      if (v.plane_pts[q].empty()) e.violation = Witness{v.pn[q]};
    }
    emit(4, e);
  }

  // I,5: the plane through three non-collinear points is unique.
  {
    Eval e;
    for (int i = 0; i < np && !e.violation; ++i)
      for (int j = i + 1; j < np && !e.violation; ++j)
        for (int k = j + 1; k < np && !e.violation; ++k) {
          if (v.collinear3(i, j, k)) continue;
          std::vector<int> containing;
          for (int q = 0; q < nq; ++q)
            if (v.plane_contains3(q, i, j, k)) containing.push_back(q);
          if (!containing.empty()) e.any_instance = true;
          if (containing.size() > 1)
            e.violation = Witness{v.pt[i], v.pt[j], v.pt[k], v.pn[containing[0]],
                                  v.pn[containing[1]]};
        }
    emit(5, e);
  }

  // I,6: if two points of a line lie in a plane, the whole line does.
  {
    Eval e;
    for (int l = 0; l < nl && !e.violation; ++l) {
      const auto &pts = v.line_pts[l];
      for (std::size_t a = 0; a < pts.size() && !e.violation; ++a)
        for (std::size_t b = a + 1; b < pts.size() && !e.violation; ++b)
          for (int q = 0; q < nq && !e.violation; ++q) {
            if (!v.on_plane(pts[a], q) || !v.on_plane(pts[b], q)) continue;
            e.any_instance = true;
            for (int r : pts)
              if (!v.on_plane(r, q)) {
                e.violation = Witness{v.ln[l], v.pt[pts[a]], v.pt[pts[b]], v.pn[q], v.pt[r]};
                break;
              }
          }
    }
    emit(6, e);
  }

  // I,7: two planes sharing a point share a second point.
  {
    Eval e;
    for (int q1 = 0; q1 < nq && !e.violation; ++q1)
      for (int q2 = q1 + 1; q2 < nq && !e.violation; ++q2) {
        std::vector<int> shared;
        std::set_intersection(v.plane_pts[q1].begin(), v.plane_pts[q1].end(),
                              v.plane_pts[q2].begin(), v.plane_pts[q2].end(),
                              std::back_inserter(shared));
        if (shared.empty()) continue;
        e.any_instance = true;
        if (shared.size() < 2) e.violation = Witness{v.pn[q1], v.pn[q2], v.pt[shared[0]]};
      }
    emit(7, e);
  }

  // I,8: four points exist not lying on a common plane.
  {
    Eval e;
    bool found = false;
    for (int i = 0; i < np && !found; ++i)
      for (int j = i + 1; j < np && !found; ++j)
        for (int k = j + 1; k < np && !found; ++k)
          for (int m = k + 1; m < np && !found; ++m) {
            bool coplanar = false;
            for (int q = 0; q < nq && !coplanar; ++q)
              coplanar = v.plane_contains3(q, i, j, k) && v.on_plane(m, q);
            found = !coplanar;
          }
    e.forced = found;
    emit(8, e);
  }

  return out;
}

BetweennessModel parse_betweenness(const std::string &text) {
  BetweennessModel m;
  bool saw_points = false;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream toks(raw);
    std::string directive;
    if (!(toks >> directive)) continue;
    if (directive == "points:") {
      if (saw_points) throw parse_error(lineno, "duplicate 'points:' directive");
      saw_points = true;
      std::string name;
      while (toks >> name) m.points.push_back(name);
    } else if (directive == "between:") {
      std::string a, b, c, extra;
      if (!(toks >> a >> b >> c) || (toks >> extra))
        throw parse_error(lineno, "'between:' expects exactly three names");
      m.between.emplace_back(a, b, c);
    } else {
      throw parse_error(lineno, "unknown directive '" + directive + "'");
    }
  }
  for (const auto &[a, b, c] : m.between)
    for (const auto &n : {a, b, c})
      if (std::find(m.points.begin(), m.points.end(), n) == m.points.end())
        throw structural_error("between triple references unknown point '" + n + "'");
  return m;
}

std::vector<AxiomReport> check_group_ii_linear(const BetweennessModel &m) {
  const auto &pts = m.points;
  auto has = [&](const std::string &a, const std::string &b, const std::string &c) {
    return std::find(m.between.begin(), m.between.end(), std::make_tuple(a, b, c)) !=
           m.between.end();
  };
  std::vector<AxiomReport> out;

  // II,1 (symmetric part on one line): members name distinct points and
  // the relation is closed under reversal.
  {
    Eval e;
    for (const auto &[a, b, c] : m.between) {
      e.any_instance = true;
      if (a == b || b == c || a == c || !has(c, b, a)) {
        e.violation = Witness{a, b, c};
        break;
      }
    }
    out.push_back(e.report({AxiomGroup::II, 1}));
  }

  // II,2: every ordered pair (A, C) extends to some B with C between A
  // and B.
  {
    Eval e;
    for (const auto &a : pts) {
      if (e.violation) break;
      for (const auto &c : pts) {
        if (a == c) continue;
        e.any_instance = true;
        bool found = false;
        for (const auto &b : pts)
          if (b != a && b != c && has(a, c, b)) { found = true; break; }
        if (!found) { e.violation = Witness{a, c}; break; }
      }
    }
    out.push_back(e.report({AxiomGroup::II, 2}));
  }

  // II,3: among three points, at most one is between the other two.
  {
    Eval e;
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n && !e.violation; ++i)
      for (int j = i + 1; j < n && !e.violation; ++j)
        for (int k = j + 1; k < n && !e.violation; ++k) {
          e.any_instance = true;
          std::vector<std::string> middles;
          auto probe = [&](const std::string &u, const std::string &mid, const std::string &w) {
            if (has(u, mid, w) || has(w, mid, u)) middles.push_back(mid);
          };
          probe(pts[j], pts[i], pts[k]);
          probe(pts[i], pts[j], pts[k]);
          probe(pts[i], pts[k], pts[j]);
          if (middles.size() > 1) e.violation = Witness{pts[i], pts[j], pts[k]};
        }
    out.push_back(e.report({AxiomGroup::II, 3}));
  }

  return out;
}

namespace {

struct TripleSearch {
  std::vector<std::array<int, 3>> triples;  // all distinct ordered (a, mid, c)
  std::vector<int> reverse_of;              // index of (c, mid, a)
  std::vector<int> unordered_key;           // key identifying {a, mid, c}
  std::vector<signed char> state;           // -1 undecided, 0 out, 1 in
  std::vector<int> chosen_middle;           // per unordered key, -1 if none yet
  int n;
  std::uint64_t nodes = 0;
  std::optional<std::vector<std::tuple<int, int, int>>> found;

  explicit TripleSearch(int n_) : n(n_) {
    std::map<std::array<int, 3>, int> index;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) {
          if (a == b || b == c || a == c) continue;
          index[{a, b, c}] = static_cast<int>(triples.size());
          triples.push_back({a, b, c});
        }
    reverse_of.resize(triples.size());
    unordered_key.resize(triples.size());
    for (std::size_t t = 0; t < triples.size(); ++t) {
      auto [a, b, c] = triples[t];
      reverse_of[t] = index[{c, b, a}];
      std::array<int, 3> key = {a, b, c};
      std::sort(key.begin(), key.end());
      unordered_key[t] = (key[0] * n + key[1]) * n + key[2];
    }
    state.assign(triples.size(), -1);
    chosen_middle.assign(n * n * n, -1);
  }

  bool ii2_satisfied() const {
    for (int a = 0; a < n; ++a)
      for (int c = 0; c < n; ++c) {
        if (a == c) continue;
        bool found_ext = false;
        for (std::size_t t = 0; t < triples.size() && !found_ext; ++t)
          found_ext = state[t] == 1 && triples[t][0] == a && triples[t][1] == c;
        if (!found_ext) return false;
      }
    return true;
  }

  void dfs(std::size_t idx) {
    if (found) return;
    if (idx == triples.size()) {
      if (ii2_satisfied()) {
        std::vector<std::tuple<int, int, int>> rel;
        for (std::size_t t = 0; t < triples.size(); ++t)
          if (state[t] == 1) rel.emplace_back(triples[t][0], triples[t][1], triples[t][2]);
        found = std::move(rel);
      }
      return;
    }
    int rev = reverse_of[idx];
    int key = unordered_key[idx];
    int mid = triples[idx][1];
    // exclude: fine unless the reverse is already in (II,1).
    if (!(rev < static_cast<int>(idx) && state[rev] == 1)) {
      ++nodes;
      state[idx] = 0;
      dfs(idx + 1);
      state[idx] = -1;
      if (found) return;
    }
    // include: reverse must not be excluded (II,1), and no other middle may
    // already be chosen for this point set (II,3).
    if (!(rev < static_cast<int>(idx) && state[rev] == 0) &&
        (chosen_middle[key] == -1 || chosen_middle[key] == mid)) {
      ++nodes;
      int prev = chosen_middle[key];
      state[idx] = 1;
      chosen_middle[key] = mid;
      dfs(idx + 1);
      state[idx] = -1;
      chosen_middle[key] = prev;
    }
  }
};

}  // namespace

LinearOrderSearch search_linear_order_models(int n) {
  TripleSearch search(n);
  if (n >= 2) search.dfs(0);  // n < 2 has no ordered pair, II,2 vacuous
  LinearOrderSearch result;
  result.nodes_examined = search.nodes;
  result.model = std::move(search.found);
  if (n < 2) result.model = std::vector<std::tuple<int, int, int>>{};  // empty relation works
  return result;
}

}  // namespace hilbert
