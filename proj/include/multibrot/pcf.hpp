#pragma once

#include "multibrot/numeric.hpp"

#include <vector>

namespace mbx {

// P_n(c) = f_c^n(0) as an exact integer polynomial in c:
// P_1 = c, P_{n+1} = P_n^d + c, degree d^{n-1}.
struct CriticalOrbitPoly {
  int d = 2;
  int n = 1;
  std::vector<BigInt> coeffs;  // ascending
  std::size_t degree() const { return coeffs.size() - 1; }
};

CriticalOrbitPoly critical_orbit_poly(int d, int n, std::size_t degree_cap = 4096);

// Roots of P_n whose critical orbit has exact period n (superattracting
// centers), filtered by orbit recomputation at 50-digit precision.
std::vector<Complex> hyperbolic_centers(int d, int n, std::size_t degree_cap = 4096);

// Roots of P_{m+n} - P_m with exact preperiod m >= 1 and eventual period n.
std::vector<Complex> misiurewicz(int d, int m, int n, std::size_t degree_cap = 4096);

struct ParabolicParam {
  Complex c;
  Complex alpha;       // fixed point: alpha^d + c = alpha
  Complex multiplier;  // d alpha^{d-1}
};

// All d-1 fixed-point records with multiplier lambda (|lambda| <= 1); the main
// hyperbolic component is the image of |alpha| < (1/d)^{1/(d-1)} under
// alpha - alpha^d.
std::vector<ParabolicParam> main_component_point(int d, Complex lambda);

// The d-1 boundary parameters with multiplier e^{2 pi i / n}.
std::vector<ParabolicParam> parabolic_boundary(int d, int n);

// Heuristic detector: does the critical orbit revisit a previous point within
// tol before max_iter?
bool is_pcf_numeric(int d, Complex c, int max_iter = 256, double tol = 1e-9);

}  // namespace mbx
