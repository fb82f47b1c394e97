#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hilbert {

struct SuiteResult {
  std::string name;
  int samples = 0;
  int failures = 0;
};

/// Seeded random verification of the order axioms and Theorem 3 in the
/// exact rational plane. Arithmetic is exact, so the expected failure
/// count is zero for every suite; any failure is a defect.
/// Suites: II,1 symmetry, II,2 extension, II,3 uniqueness, II,4 Pasch
/// crossing, Theorem 3 construction.
std::vector<SuiteResult> run_plane_suites(std::uint64_t seed, int samples);

}  // namespace hilbert
