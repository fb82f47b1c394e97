#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hilbert {

struct parse_error : std::runtime_error {
  int line;
  parse_error(int line_, const std::string &msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct structural_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite three-sorted incidence structure: named points, lines and planes
// with explicit point-line and point-plane incidence pair sets. Incidence
// is stored as pairs (not as point sets per line) so that two distinct
// lines with identical point sets are representable.
struct FiniteIncidenceStructure {
  std::vector<std::string> points;
  std::vector<std::string> lines;
  std::vector<std::string> planes;
  std::set<std::pair<std::string, std::string>> on_line;   // (point, line)
  std::set<std::pair<std::string, std::string>> on_plane;  // (point, plane)

  friend bool operator==(const FiniteIncidenceStructure &,
                         const FiniteIncidenceStructure &) = default;

  /// Throws structural_error on duplicate names, name reuse across sorts,
  /// or incidence pairs referencing undeclared elements.
  void validate() const;

  std::size_t object_count() const { return points.size() + lines.size() + planes.size(); }
};

/// The minimal Group I model: the 4 vertices, 6 edges and 4 faces of a
/// tetrahedron, with the 12 + 12 incidences of its standard presentation.
FiniteIncidenceStructure tetrahedron();

/// Parses the line-oriented model format:
///   points: <name>*   lines: <name>*   planes: <name>*
///   on_line: <point> <line>
///   on_plane: <point> <plane>
/// '#' starts a comment. Headers appear at most once each and before any
/// incidence line; an empty file yields the empty structure.
FiniteIncidenceStructure parse_model(const std::string &text);

/// Canonical serialization; parse_model(serialize_model(s)) == s, and
/// equal structures serialize byte-identically.
std::string serialize_model(const FiniteIncidenceStructure &s);

}  // namespace hilbert
