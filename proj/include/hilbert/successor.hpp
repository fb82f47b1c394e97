#pragma once

#include <stdexcept>
#include <string>

#include "hilbert/plane.hpp"

namespace hilbert {

/// A constraint of the six-point configuration is violated; what() names it.
struct diagram_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A postcondition that is provably unreachable for valid input failed;
/// indicates a defect, never user error.
struct internal_consistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

// The six-point configuration the successor function acts on:
//   - A, B, zero are not collinear
//   - B lies between A and C
//   - zero lies between C and D
//   - N lies between A and zero, or N == zero
// A, B, C, D and zero are the fixed frame; N is the moving point.
struct Diagram {
  RatPoint A, B, C, D, zero, N;

  friend bool operator==(const Diagram &, const Diagram &) = default;
};

/// Validates all four constraints; throws diagram_error naming the first
/// violated one.
Diagram make_diagram(const RatPoint &A, const RatPoint &B, const RatPoint &C,
                     const RatPoint &D, const RatPoint &zero, const RatPoint &N);

// One application of the successor: d_prime = CN ∩ AD, and the output
// diagram replaces N by BD' ∩ A0. Every recorded step satisfies
//   collinear(C, d_prime, input.N), collinear(B, d_prime, output.N),
//   collinear(A, D, d_prime), between(A, output.N, zero), and
//   between(A, output.N, input.N) when input.N != zero.
struct SuccessorStep {
  Diagram input;
  RatPoint d_prime;
  Diagram output;
};

/// Computes the successor of a valid diagram and verifies all step
/// invariants before returning. The base diagram (N == zero) goes through
/// the same two intersections; there CN passes through D, so d_prime == D.
/// Throws internal_consistency_error if any postcondition fails.
SuccessorStep successor(const Diagram &d);

/// The N point after n successor applications of a fresh diagram
/// (one with N == zero). nat_point(d, 0) == d.zero.
RatPoint nat_point(const Diagram &d, int n);

/// Certifies the Dedekind-infinity evidence on one orbit: the first n+1
/// iterates are pairwise distinct, each later iterate lies between A and
/// every earlier one, and zero never reappears past step 0.
bool verify_injective(const Diagram &d, int n);

/// Parses "A=(0,0);B=(1,1);C=(2,2);D=(0,-2);zero=(1,0);N=(1,0)".
/// "0" is accepted for "zero"; N defaults to zero when omitted.
/// Throws parse/diagram errors on malformed or invalid input.
Diagram parse_diagram(const std::string &spec);

}  // namespace hilbert
