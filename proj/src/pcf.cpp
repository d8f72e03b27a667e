#include "multibrot/pcf.hpp"

#include "multibrot/error.hpp"
#include "multibrot/roots.hpp"

#include <algorithm>
#include <cmath>

namespace mbx {

namespace {

void check_degree(int d) {
  if (d < 2 || d > 64) fail(errc::invalid_argument, "degree out of range");
}

std::vector<BigInt> poly_mul(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

HighComplex fc_step(int d, const HighComplex& z, const HighComplex& c) {
  HighComplex out{1, 0};
  HighComplex base = z;
  int e = d;
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out + c;
}

// Exact eventual period and preperiod of the critical orbit at 50 digits.
struct OrbitShape {
  int preperiod = -1;  // -1: no cycle detected within the horizon
  int period = 0;
};

OrbitShape critical_orbit_shape(int d, const HighComplex& c, int horizon) {
  const HighFloat tol("1e-20");
  std::vector<HighComplex> orbit{HighComplex(0, 0)};
  for (int i = 0; i < horizon; ++i) orbit.push_back(fc_step(d, orbit.back(), c));
  const int last = static_cast<int>(orbit.size()) - 1;
  OrbitShape shape;
  for (int per = 1; per <= last; ++per) {
    if (abs(orbit[last] - orbit[last - per]) < tol) {
      shape.period = per;
      break;
    }
  }
  if (shape.period == 0) return shape;
  int pre = last - shape.period;
  while (pre >= 1 && abs(orbit[pre - 1 + shape.period] - orbit[pre - 1]) < tol) --pre;
  shape.preperiod = pre;
  return shape;
}

}  // namespace

CriticalOrbitPoly critical_orbit_poly(int d, int n, std::size_t degree_cap) {
  check_degree(d);
  if (n < 1) fail(errc::invalid_argument, "iterate count must be positive");
  double deg = 1;
  for (int i = 1; i < n; ++i) {
    deg *= d;
    if (deg > static_cast<double>(degree_cap))
      fail(errc::budget_exceeded, "degree d^{n-1} exceeds the configured cap");
  }
  CriticalOrbitPoly out;
  out.d = d;
  out.n = n;
  out.coeffs = {0, 1};  // P_1 = c
  for (int i = 1; i < n; ++i) {
    std::vector<BigInt> power{1};
    for (int e = 0; e < d; ++e) power = poly_mul(power, out.coeffs);
    power[1] += 1;  // + c
    out.coeffs = std::move(power);
  }
  return out;
}

std::vector<Complex> hyperbolic_centers(int d, int n, std::size_t degree_cap) {
  const CriticalOrbitPoly pn = critical_orbit_poly(d, n, degree_cap);
  std::vector<BigInt> poly = poly_trim(pn.coeffs);
  // Strip roots at c = 0 (the period-1 center).
  std::size_t zeros = 0;
  while (zeros < poly.size() && poly[zeros] == 0) ++zeros;
  poly.erase(poly.begin(), poly.begin() + zeros);
  std::vector<Complex> out;
  if (zeros > 0 && n == 1) out.push_back({0.0, 0.0});
  if (poly.size() >= 2) {
    if (poly.size() <= 65) poly = squarefree_part(poly);
    for (const HighComplex& root : aberth_roots(poly)) {
      const OrbitShape shape = critical_orbit_shape(d, root, 4 * n + 8);
      if (shape.preperiod == 0 && shape.period == n)
        out.push_back({root.real().convert_to<double>(), root.imag().convert_to<double>()});
    }
  }
  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

std::vector<Complex> misiurewicz(int d, int m, int n, std::size_t degree_cap) {
  check_degree(d);
  if (m < 1 || n < 1) fail(errc::invalid_argument, "need preperiod m >= 1 and period n >= 1");
  const CriticalOrbitPoly pmn = critical_orbit_poly(d, m + n, degree_cap);
  const CriticalOrbitPoly pm = critical_orbit_poly(d, m, degree_cap);
  std::vector<BigInt> poly(pmn.coeffs);
  for (std::size_t i = 0; i < pm.coeffs.size(); ++i) poly[i] -= pm.coeffs[i];
  poly = poly_trim(std::move(poly));
  std::size_t zeros = 0;
  while (zeros < poly.size() && poly[zeros] == 0) ++zeros;
  poly.erase(poly.begin(), poly.begin() + zeros);  // periodic, not preperiodic
  std::vector<Complex> out;
  if (poly.size() >= 2) {
    poly = squarefree_part(poly);
    for (const HighComplex& root : aberth_roots(poly)) {
      // Keep the horizon short: the root error grows with every repelling lap.
      const OrbitShape shape = critical_orbit_shape(d, root, m + 2 * n + 6);
      if (shape.preperiod == m && shape.period == n)
        out.push_back({root.real().convert_to<double>(), root.imag().convert_to<double>()});
    }
  }
  std::sort(out.begin(), out.end(), [](const Complex& a, const Complex& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

std::vector<ParabolicParam> main_component_point(int d, Complex lambda) {
  check_degree(d);
  if (std::abs(lambda) > 1.0 + 1e-9)
    fail(errc::invalid_argument, "multiplier must satisfy |lambda| <= 1");
  std::vector<ParabolicParam> out;
  if (std::abs(lambda) == 0.0) {
    out.push_back({{0.0, 0.0}, {0.0, 0.0}, {0.0, 0.0}});
    return out;
  }
  // d alpha^{d-1} = lambda: d-1 solutions, each giving c = alpha - alpha^d.
  const Complex base = std::pow(lambda / static_cast<double>(d), 1.0 / (d - 1));
  for (int j = 0; j < d - 1; ++j) {
    const double t = 2.0 * M_PI * j / (d - 1);
    const Complex alpha = base * std::polar(1.0, t);
    Complex alpha_d = 1.0;
    for (int e = 0; e < d; ++e) alpha_d *= alpha;
    out.push_back({alpha - alpha_d, alpha, static_cast<double>(d) * alpha_d / alpha});
  }
  return out;
}

std::vector<ParabolicParam> parabolic_boundary(int d, int n) {
  if (n < 2) fail(errc::invalid_argument, "parabolic boundary needs n >= 2");
  const Complex lambda = std::polar(1.0, 2.0 * M_PI / n);
  return main_component_point(d, lambda);
}

bool is_pcf_numeric(int d, Complex c, int max_iter, double tol) {
  check_degree(d);
  std::vector<Complex> orbit{{0.0, 0.0}};
  for (int i = 0; i < max_iter; ++i) {
    Complex z = 1.0;
    for (int e = 0; e < d; ++e) z *= orbit.back();
    z += c;
    for (const Complex& prev : orbit)
      if (std::abs(z - prev) < tol) return true;
    if (std::abs(z) > 1e10) return false;
    orbit.push_back(z);
  }
  return false;
}

}  // namespace mbx
