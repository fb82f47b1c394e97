#include "hilbert/structure.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace hilbert {
namespace {

void check_unique(const std::vector<std::string> &names,
                  std::unordered_set<std::string> &seen, const char *sort) {
  for (const auto &n : names) {
    if (!seen.insert(n).second)
      throw structural_error(std::string("duplicate name '") + n + "' (" + sort + ")");
  }
}

bool contains(const std::vector<std::string> &names, const std::string &n) {
  return std::find(names.begin(), names.end(), n) != names.end();
}

}  // namespace

void FiniteIncidenceStructure::validate() const {
  std::unordered_set<std::string> seen;
  check_unique(points, seen, "point");
  check_unique(lines, seen, "line");
  check_unique(planes, seen, "plane");
  for (const auto &[p, l] : on_line) {
    if (!contains(points, p)) throw structural_error("on_line references unknown point '" + p + "'");
    if (!contains(lines, l)) throw structural_error("on_line references unknown line '" + l + "'");
  }
  for (const auto &[p, q] : on_plane) {
    if (!contains(points, p)) throw structural_error("on_plane references unknown point '" + p + "'");
    if (!contains(planes, q)) throw structural_error("on_plane references unknown plane '" + q + "'");
  }
}

FiniteIncidenceStructure tetrahedron() {
  FiniteIncidenceStructure s;
  s.points = {"A", "B", "C", "D"};
  s.lines = {"a", "b", "c", "d", "e", "f"};
  s.planes = {"alpha", "beta", "gamma", "delta"};
  s.on_line = {{"A", "a"}, {"B", "a"}, {"A", "b"}, {"C", "b"},
               {"B", "c"}, {"C", "c"}, {"A", "d"}, {"D", "d"},
               {"B", "e"}, {"D", "e"}, {"C", "f"}, {"D", "f"}};
  s.on_plane = {{"A", "alpha"}, {"B", "alpha"}, {"C", "alpha"},
                {"A", "beta"},  {"B", "beta"},  {"D", "beta"},
                {"A", "gamma"}, {"C", "gamma"}, {"D", "gamma"},
                {"B", "delta"}, {"C", "delta"}, {"D", "delta"}};
  return s;
}

FiniteIncidenceStructure parse_model(const std::string &text) {
  FiniteIncidenceStructure s;
  bool saw_points = false, saw_lines = false, saw_planes = false;
  bool saw_incidence = false;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream toks(raw);
    std::string directive;
    if (!(toks >> directive)) continue;  // blank line

    auto read_names = [&](std::vector<std::string> &dst, bool &seen_flag) {
      if (seen_flag) throw parse_error(lineno, "duplicate '" + directive + "' directive");
      if (saw_incidence) throw parse_error(lineno, "'" + directive + "' must precede incidence lines");
      seen_flag = true;
      std::string name;
      while (toks >> name) dst.push_back(name);
    };
    auto read_pair = [&](std::set<std::pair<std::string, std::string>> &dst) {
      saw_incidence = true;
      std::string a, b, extra;
      if (!(toks >> a >> b) || (toks >> extra))
        throw parse_error(lineno, "'" + directive + "' expects exactly two names");
      dst.insert({a, b});
    };

    if (directive == "points:") read_names(s.points, saw_points);
    else if (directive == "lines:") read_names(s.lines, saw_lines);
    else if (directive == "planes:") read_names(s.planes, saw_planes);
    else if (directive == "on_line:") read_pair(s.on_line);
    else if (directive == "on_plane:") read_pair(s.on_plane);
    else throw parse_error(lineno, "unknown directive '" + directive + "'");
  }
  try {
    s.validate();
  } catch (const structural_error &e) {
    throw parse_error(lineno, e.what());
  }
  return s;
}

std::string serialize_model(const FiniteIncidenceStructure &s) {
  std::ostringstream out;
  auto emit_names = [&](const char *header, const std::vector<std::string> &names) {
    out << header;
    for (const auto &n : names) out << ' ' << n;
    out << '\n';
  };
  emit_names("points:", s.points);
  emit_names("lines:", s.lines);
  emit_names("planes:", s.planes);
  for (const auto &[p, l] : s.on_line) out << "on_line: " << p << ' ' << l << '\n';
  for (const auto &[p, q] : s.on_plane) out << "on_plane: " << p << ' ' << q << '\n';
  return out.str();
}

}  // namespace hilbert
