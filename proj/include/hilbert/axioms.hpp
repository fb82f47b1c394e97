#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hilbert/structure.hpp"

namespace hilbert {

enum class AxiomGroup { I, II };

struct AxiomId {
  AxiomGroup group;
  int index;  // I: 1..8, II: 1..4

  friend bool operator==(const AxiomId &, const AxiomId &) = default;
};

std::string to_string(const AxiomId &id);  // "I,1", "II,3", ...

enum class Verdict { holds, fails, vacuous };

// Per-axiom result. A failing universal carries a violating tuple of
// element names; a failing existential has an empty witness (there is no
// finite counterexample tuple to show).
struct AxiomReport {
  AxiomId axiom;
  Verdict verdict;
  std::optional<std::vector<std::string>> witness;
};

/// Evaluates the eight Group I incidence axioms over a finite structure by
/// exhaustive enumeration. The axiom statements follow the tenth-edition
/// numbering:
///   I,1  two distinct points lie on a common line
///   I,2  that line is unique
///   I,3  every line carries two points; three non-collinear points exist
///   I,4  three non-collinear points lie on a plane; planes are nonempty
///   I,5  the plane through three non-collinear points is unique
///   I,6  a line with two points in a plane lies in the plane
///   I,7  planes sharing a point share a second point
///   I,8  four points exist that do not lie on a common plane
/// Universals with an empty hypothesis domain report vacuous.
/// Throws structural_error on a malformed structure.
std::vector<AxiomReport> check_group_i(const FiniteIncidenceStructure &s);

// A finite betweenness model on a single line: a point set and an explicit
// ternary relation, triple (p, q, r) meaning q lies between p and r.
struct BetweennessModel {
  std::vector<std::string> points;
  std::vector<std::tuple<std::string, std::string, std::string>> between;
};

/// Parses the line-oriented format:
///   points: <name>*
///   between: <p> <q> <r>     # q lies between p and r
BetweennessModel parse_betweenness(const std::string &text);

/// Evaluates the linear order axioms II,1-II,3 over an explicit
/// betweenness relation (single-line universe, so II,4 does not apply).
/// II,1 is checked in its symmetric part: triples name distinct points and
/// the relation contains the reverse of each member.
/// Throws structural_error if a triple references an unknown point.
std::vector<AxiomReport> check_group_ii_linear(const BetweennessModel &m);

struct LinearOrderSearch {
  // relation found satisfying II,1-II,3, as middle-second index triples
  std::optional<std::vector<std::tuple<int, int, int>>> model;
  std::uint64_t nodes_examined = 0;
};

/// Exhaustive search over all betweenness relations on n collinear points
/// (the 2^(n(n-1)(n-2)) subsets of distinct ordered triples), pruned by
/// II,1 symmetry and II,3 uniqueness, for one satisfying II,1-II,3.
/// Theorem 7 predicts none exists for n >= 2.
LinearOrderSearch search_linear_order_models(int n);

}  // namespace hilbert
