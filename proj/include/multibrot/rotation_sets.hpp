#pragma once

#include "multibrot/angles.hpp"

#include <cstdint>
#include <vector>

namespace mbx {

// Finite subset of the circle on which multiplication by d acts as a
// combinatorial rotation. Angles are sorted increasing; the deployment
// sequence has d-1 entries, the last equal to angles.size().
struct RotationSet {
  int d = 2;
  std::vector<Angle> angles;
  Rational rotation_number{0};  // p/q in lowest terms
  unsigned k = 1;               // number of tau_d cycles; |angles| = k*q
  std::vector<std::int64_t> deployment;

  friend bool operator==(const RotationSet& a, const RotationSet& b) {
    return a.d == b.d && a.angles == b.angles;
  }
};

// s_i = #{theta in angles : theta < i/(d-1)}, i = 1..d-1. Ties at partition
// points are not counted (half-open interval).
std::vector<std::int64_t> deployment_sequence(int d, const std::vector<Angle>& sorted_angles);

// Verifies tau_d-invariance and the constant index-shift condition, then fills
// rotation number, cycle count and deployment.
RotationSet recognize(int d, std::vector<Angle> angles);

// The unique rotation set with the given rotation number and deployment
// sequence, or errc::unrealizable when no such set exists.
RotationSet construct(int d, const Rational& rotation_number,
                      const std::vector<std::int64_t>& deployment);

// Exhaustive oracle: all rotation sets whose angles have denominator dividing
// d^q - 1, found by filtering unions of tau_d cycles. Guard: d^q <= 10^6.
std::vector<RotationSet> brute_force_enumerate(int d, unsigned q);

// The d-1 rotation sets with rotation number 1/n whose deployment entries are
// all 0 or n; the one with deployment {n,...,n} comes first.
std::vector<RotationSet> prop35_family(int d, unsigned n);

}  // namespace mbx
