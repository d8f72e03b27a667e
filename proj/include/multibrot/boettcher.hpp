#pragma once

#include "multibrot/angles.hpp"
#include "multibrot/numeric.hpp"

#include <cstddef>
#include <vector>

namespace mbx {

// Truncated expansion z + sum_{m=0}^{order} coeffs[m] z^{-m} with exact
// rational coefficients; valid through z^{-order}.
struct LaurentTail {
  int d = 2;
  std::size_t order = 0;
  std::vector<Rational> coeffs;

  const Rational& operator[](std::size_t m) const { return coeffs[m]; }
};

// Uniformization of the complement of M_d evaluated along the critical value:
// Phi(c) = c + sum a_m c^{-m}, exact coefficients from the Boettcher
// functional equation.
LaurentTail phi_series(int d, std::size_t order);

// Series reversion of phi_series: Psi(Phi(c)) = c through the truncation.
LaurentTail psi_series(int d, std::size_t order);

struct AffineMap {
  Complex A{1.0, 0.0};
  Complex B{0.0, 0.0};
  Angle rotation;  // A = e^{2 pi i rotation}, exact bookkeeping
};

// The affine symmetry group of M_d, decided coefficientwise from psi_series.
// Requires order >= d + 2.
std::vector<AffineMap> affine_symmetries(int d, std::size_t order);

// Escape-rate potential of z under z -> z^d + c. Returns 0 when the orbit
// stays bounded through max_iter. escape_radius <= 0 selects the default
// max(2, |c|)^{1/(d-1)} + 1.
double green_dynamic(int d, Complex c, Complex z, int max_iter = 1000, double escape_radius = 0);

// Parameter-plane potential G_{f_c}(c) = log|Phi(c)|.
double green_parameter(int d, Complex c, int max_iter = 1000, double escape_radius = 0);

// Boettcher coordinate phi_c(z), branch-tracked product accumulation.
// Requires G(z) > G(0) when c escapes.
Complex boettcher_coordinate(int d, Complex c, Complex z, double precision = 1e-12,
                             int max_iter = 4000);

// Phi(c) = phi_{f_c}(c); errors when c is inside M_d.
Complex phi_eval(int d, Complex c, double precision = 1e-12, int max_iter = 4000);

// Numeric Horner evaluation of a tail series at w (|w| > 1 expected).
Complex tail_eval(const LaurentTail& tail, Complex w);

}  // namespace mbx
