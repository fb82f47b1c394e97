#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "hilbert/structure.hpp"

namespace hilbert {

struct bounds_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Search space bounds. Hard caps keep the exhaustive search desk-scale.
struct SearchBounds {
  int max_points = 0;
  int max_lines = 0;
  int max_planes = 0;

  static constexpr int cap_points = 5;
  static constexpr int cap_lines = 8;
  static constexpr int cap_planes = 6;

  /// Throws bounds_error when negative or above the caps.
  void check() const;
};

struct SearchOutcome {
  bool satisfiable = false;
  std::vector<FiniteIncidenceStructure> minimal_models;  // canonical representatives
  std::uint64_t structures_examined = 0;
  std::chrono::duration<double> elapsed{0};
};

/// Streams every isomorphism class of extensional candidate within bounds
/// exactly once: candidate lines are distinct point subsets of size >= 2,
/// candidate planes distinct subsets of size >= 3, and only the
/// lexicographically least labeling of each class is emitted.
/// (Non-extensional structures necessarily fail the uniqueness axioms
/// I,2 / I,5, so they cannot be models.)
void enumerate_candidates(const SearchBounds &bounds,
                          const std::function<void(const FiniteIncidenceStructure &)> &yield);

/// Exhaustive bounded search for Group I models. Prunes with the
/// point-line axioms (every point pair covered by exactly one line) before
/// expanding plane sets; every surviving candidate is re-checked with the
/// full Group I checker, never trusted from search state. Reported models
/// are canonical class representatives, minimal under componentwise size
/// domination.
SearchOutcome find_minimum(const SearchBounds &bounds);

/// Sort-preserving isomorphism test by backtracking over point bijections
/// with incidence-degree pruning (structures here have <= ~14 elements).
bool isomorphic(const FiniteIncidenceStructure &s1, const FiniteIncidenceStructure &s2);

}  // namespace hilbert
