#pragma once

#include "multibrot/angles.hpp"
#include "multibrot/boettcher.hpp"
#include "multibrot/pcf.hpp"

#include <string>
#include <vector>

namespace mbx {

struct RaySample {
  double potential = 0;  // log|Phi| at the sample
  Complex point;
};

struct RayTrace {
  int d = 2;
  Angle theta;
  bool dynamic = false;
  Complex c;  // dynamical-plane parameter (dynamic traces only)
  std::vector<RaySample> samples;  // strictly decreasing potentials
  Complex landing_estimate;
  bool converged = false;
  bool flagged_denominator = false;  // denominator shares a factor with d
  std::string note;
};

// Newton continuation on Phi(c) = e^{t + 2 pi i theta} along a geometric
// potential schedule (steps sub-steps per halving), from log 4 down to
// potential_floor, with the landing point extrapolated from the tail.
RayTrace trace_parameter_ray(int d, const Angle& theta, double potential_floor = 1e-7,
                             int steps = 4, double landing_tol = 1e-4);

// Dynamic ray of f_c at angle theta, traced by iterated inverse images with
// the branch nearest the previous sample. For escaping c the floor must stay
// above the critical potential G_{f_c}(0).
RayTrace trace_dynamic_ray(int d, Complex c, const Angle& theta, double potential_floor = 1e-6,
                           int steps = 4, double landing_tol = 1e-4);

struct LandingPair {
  int d = 2;
  Angle theta;
  Angle theta_prime;
  Complex landing_point;
  unsigned period = 1;
  double disagreement = 0;  // distance between the two landing estimates
};

// Traces both rays and accepts iff the landing estimates agree within tol.
LandingPair verify_landing_pair(int d, const Angle& theta, const Angle& theta_prime,
                                double tol = 1e-4);

struct Prop35Result {
  LandingPair pair;          // angles 1/(d^n-1), d/(d^n-1)
  ParabolicParam witness;    // matching boundary parameter of H_d
  double witness_distance = 0;
};

// Verifies that 1/(d^n-1) and d/(d^n-1) land together on a parabolic boundary
// point of the main hyperbolic component (multiplier e^{2 pi i / n}).
Prop35Result prop35_check(int d, int n, double tol = 1e-3);

// True iff point lies in the component of the plane cut by the two rays that
// does not contain the origin. Decided by crossing parity against the traced
// polyline; points within guard distance of the curve are errors.
bool wake_contains(int d, const LandingPair& pair, Complex point);

}  // namespace mbx
