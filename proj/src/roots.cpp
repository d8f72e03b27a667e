#include "multibrot/roots.hpp"

#include "multibrot/error.hpp"

#include <algorithm>
#include <cmath>

namespace mbx {

std::vector<BigInt> poly_trim(std::vector<BigInt> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::vector<BigInt> poly_derivative(const std::vector<BigInt>& p) {
  std::vector<BigInt> out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * BigInt(i));
  return poly_trim(std::move(out));
}

std::vector<BigInt> poly_primitive_part(std::vector<BigInt> p) {
  p = poly_trim(std::move(p));
  if (p.empty()) return p;
  BigInt g = 0;
  for (const BigInt& c : p) g = gcd(g, c);
  if (p.back() < 0) g = -g;
  for (BigInt& c : p) c /= g;
  return p;
}

namespace {

// lc(b)^{deg a - deg b + 1} * a mod b, over Z.
std::vector<BigInt> pseudo_rem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const BigInt lead = a.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] *= b.back();
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= lead * b[i];
    a = poly_trim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

}  // namespace

std::vector<BigInt> poly_gcd(std::vector<BigInt> a, std::vector<BigInt> b) {
  a = poly_primitive_part(std::move(a));
  b = poly_primitive_part(std::move(b));
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    std::vector<BigInt> r = poly_primitive_part(pseudo_rem(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<BigInt> squarefree_part(const std::vector<BigInt>& p) {
  std::vector<BigInt> q = poly_primitive_part(p);
  if (q.size() <= 2) return q;
  const std::vector<BigInt> g = poly_gcd(q, poly_derivative(q));
  if (g.size() <= 1) return q;
  // Exact division q / g over Q lands back in Z (both primitive).
  std::vector<Rational> num(q.begin(), q.end());
  std::vector<Rational> quo(q.size() - g.size() + 1);
  for (std::size_t i = quo.size(); i-- > 0;) {
    Rational c = num[i + g.size() - 1] / Rational(g.back());
    quo[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) num[i + j] -= c * Rational(g[j]);
  }
  std::vector<BigInt> out;
  out.reserve(quo.size());
  for (const Rational& c : quo) {
    if (denominator(c) != 1) fail(errc::invalid_argument, "internal: inexact squarefree division");
    out.push_back(numerator(c));
  }
  return poly_primitive_part(std::move(out));
}

std::vector<HighComplex> aberth_roots(const std::vector<BigInt>& coeffs_in, int max_sweeps) {
  const std::vector<BigInt> coeffs = poly_trim(coeffs_in);
  if (coeffs.size() < 2) fail(errc::invalid_argument, "polynomial must have positive degree");
  if (coeffs.front() == 0) fail(errc::invalid_argument, "strip zero roots before calling aberth_roots");
  const std::size_t n = coeffs.size() - 1;

  std::vector<HighFloat> p(coeffs.size()), dp;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p[i] = HighFloat(coeffs[i]);
  dp.resize(n);
  for (std::size_t i = 1; i <= n; ++i) dp[i - 1] = p[i] * i;

  auto eval = [](const std::vector<HighFloat>& poly, const HighComplex& z) {
    HighComplex acc{0, 0};
    for (std::size_t i = poly.size(); i-- > 0;) acc = acc * z + poly[i];
    return acc;
  };

  // Fujiwara-style radius.
  HighFloat radius = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (coeffs[i] == 0) continue;
    const HighFloat ratio = abs(p[i] / p[n]);
    const HighFloat bound = pow(ratio, HighFloat(1) / HighFloat(static_cast<unsigned>(n - i)));
    radius = std::max(radius, bound);
  }
  radius = 2 * radius + HighFloat("0.5");

  std::vector<HighComplex> z(n);
  const double golden = 0.3819660112501051;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = 6.283185307179586 * (static_cast<double>(k) / n + golden);
    const HighFloat r = radius * HighFloat(0.4 + 0.5 * static_cast<double>(k + 1) / n);
    z[k] = HighComplex(r * HighFloat(std::cos(t)), r * HighFloat(std::sin(t)));
  }

  const HighFloat tol("1e-42");
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    HighFloat worst = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const HighComplex pv = eval(p, z[k]);
      if (abs(pv) == 0) continue;
      const HighComplex dv = eval(dp, z[k]);
      if (abs(dv) == 0) {
        z[k] += HighComplex(HighFloat("1e-3"), HighFloat("7e-4"));
        worst = std::max(worst, HighFloat(1));
        continue;
      }
      const HighComplex newton = pv / dv;
      HighComplex s{0, 0};
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        s += HighComplex(1, 0) / (z[k] - z[j]);
      }
      const HighComplex denom = HighComplex(1, 0) - newton * s;
      const HighComplex w = abs(denom) == 0 ? newton : newton / denom;
      z[k] -= w;
      worst = std::max(worst, HighFloat(abs(w) / (1 + abs(z[k]))));
    }
    if (worst < tol) return z;
  }
  fail(errc::no_convergence, "Aberth iteration did not converge");
}

}  // namespace mbx
