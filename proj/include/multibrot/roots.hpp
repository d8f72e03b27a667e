#pragma once

#include "multibrot/numeric.hpp"

#include <vector>

namespace mbx {

// Integer-polynomial helpers (coefficients ascending, trailing high zeros trimmed).
std::vector<BigInt> poly_trim(std::vector<BigInt> p);
std::vector<BigInt> poly_derivative(const std::vector<BigInt>& p);
std::vector<BigInt> poly_primitive_part(std::vector<BigInt> p);
std::vector<BigInt> poly_gcd(std::vector<BigInt> a, std::vector<BigInt> b);  // primitive PRS
std::vector<BigInt> squarefree_part(const std::vector<BigInt>& p);

// Aberth-Ehrlich simultaneous iteration in 50-digit arithmetic. Roots at zero
// must be stripped by the caller. Throws errc::no_convergence when stuck.
std::vector<HighComplex> aberth_roots(const std::vector<BigInt>& coeffs, int max_sweeps = 400);

}  // namespace mbx
