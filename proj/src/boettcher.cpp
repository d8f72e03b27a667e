#include "multibrot/boettcher.hpp"

#include "multibrot/error.hpp"
#include "multibrot/power_series.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mbx {

namespace {

void check_degree(int d) {
  if (d < 2 || d > 64) fail(errc::invalid_argument, "degree out of range");
}

Complex cpow_int(Complex z, int e) {
  Complex out{1.0, 0.0};
  while (e) {
    if (e & 1) out *= z;
    z *= z;
    e >>= 1;
  }
  return out;
}

}  // namespace

LaurentTail phi_series(int d, std::size_t order) {
  check_degree(d);
  if (order < 1) fail(errc::invalid_argument, "order must be at least 1");
  const std::size_t n = order + 1;  // need y through s^{order+1}

  // x_k = f_c^k(c) / c^{d^k} as a series in s = 1/c:
  //   x_0 = 1,  x_{k+1} = x_k^d + s^{d^{k+1} - 1}.
  RatSeries x = RatSeries::constant(1, n);
  std::uint64_t dk1 = d;  // d^{k+1}
  unsigned k = 0;
  while (dk1 - 1 <= n) {
    x = x.pow_int(static_cast<unsigned>(d));
    const std::uint64_t e = dk1 - 1;
    if (e <= n) x[static_cast<std::size_t>(e)] += 1;
    ++k;
    dk1 *= static_cast<std::uint64_t>(d);
  }
  // Phi(c) = c * x_k^{1/d^k}; the root stabilizes beyond the truncation.
  BigInt dk = big_pow(d, k);
  const RatSeries y = x.pow_rational(Rational(1, dk));

  LaurentTail out;
  out.d = d;
  out.order = order;
  out.coeffs.resize(order + 1);
  for (std::size_t m = 0; m <= order; ++m) out.coeffs[m] = y[m + 1];
  return out;
}

LaurentTail psi_series(int d, std::size_t order) {
  check_degree(d);
  if (order < static_cast<std::size_t>(d)) fail(errc::invalid_argument, "order must be >= d");
  const LaurentTail phi = phi_series(d, order);
  const std::size_t n = order + 1;

  // Psi(w) = w (1 + sigma(x)), x = 1/w. The reversion identity Phi(Psi) = w
  // reads sigma = -sum_m a_m x^{m+1} (1+sigma)^{-m}; iterate to the exact
  // fixed point (each pass extends the correct prefix by at least one order).
  RatSeries sigma(n);
  const RatSeries one = RatSeries::constant(1, n);
  for (std::size_t pass = 0; pass <= n + 1; ++pass) {
    RatSeries rhs(n);
    RatSeries inv = (one + sigma).inverse();
    RatSeries pw = one;  // (1+sigma)^{-m}
    for (std::size_t m = 0; m <= order; ++m) {
      if (!(phi.coeffs[m] == 0)) {
        RatSeries term = pw.shifted(m + 1);
        term.scale(-phi.coeffs[m]);
        rhs += term;
      }
      pw = pw * inv;
    }
    if (rhs == sigma) break;
    sigma = rhs;
    if (pass == n + 1) fail(errc::no_convergence, "series reversion did not stabilize");
  }

  LaurentTail out;
  out.d = d;
  out.order = order;
  out.coeffs.resize(order + 1);
  for (std::size_t m = 0; m <= order; ++m) out.coeffs[m] = sigma[m + 1];
  return out;
}

std::vector<AffineMap> affine_symmetries(int d, std::size_t order) {
  check_degree(d);
  if (order < static_cast<std::size_t>(d) + 2)
    fail(errc::invalid_argument, "order too shallow to decide symmetries (need >= d+2)");
  const LaurentTail psi = psi_series(d, order);

  // Psi(lambda z) = A Psi(z) + B forces A = lambda, B = b_0 (1 - lambda) and
  // lambda^{m+1} = 1 for every m >= 1 with b_m != 0.
  std::uint64_t g = 0;
  for (std::size_t m = 1; m <= order; ++m)
    if (!(psi.coeffs[m] == 0)) g = std::gcd(g, static_cast<std::uint64_t>(m + 1));
  if (g == 0) fail(errc::undecided, "no nonzero tail coefficients; truncation too shallow");

  const Rational b0 = psi.coeffs[0];
  std::vector<AffineMap> out;
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  for (std::uint64_t j = 0; j < g; ++j) {
    AffineMap map;
    map.rotation = Angle(BigInt(j), BigInt(g));
    const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(g);
    map.A = Complex(std::cos(t), std::sin(t));
    map.B = (Complex{1.0, 0.0} - map.A) * to_double(b0);
    // z -> -z-1 satisfies the first two coefficient equations for d = 2 but is
    // excluded by the b_2 equation; never emit it.
    if (std::abs(map.A + 1.0) < 1e-12 && std::abs(map.B + 1.0) < 1e-12) continue;
    out.push_back(map);
  }
  return out;
}

double green_dynamic(int d, Complex c, Complex z, int max_iter, double escape_radius) {
  check_degree(d);
  if (max_iter < 1) fail(errc::invalid_argument, "max_iter must be positive");
  double radius = escape_radius;
  if (radius <= 0) radius = std::pow(std::max(2.0, std::abs(c)), 1.0 / (d - 1)) + 1.0;
  const double refine_to = std::pow(10.0, std::min(15.0, 250.0 / d));

  long long n = 0;
  bool escaped = false;
  for (; n < max_iter; ++n) {
    if (std::abs(z) > radius) {
      escaped = true;
      break;
    }
    z = cpow_int(z, d) + c;
  }
  if (!escaped) return 0.0;
  // Monotone escape from here on; push the modulus up for accuracy.
  int extra = 0;
  while (std::abs(z) < refine_to && extra < 80) {
    z = cpow_int(z, d) + c;
    ++n;
    ++extra;
  }
  const long double log_abs = std::log(static_cast<long double>(std::abs(z)));
  const long double scale = std::exp(-static_cast<long double>(n) * std::log(static_cast<long double>(d)));
  return static_cast<double>(log_abs * scale);
}

double green_parameter(int d, Complex c, int max_iter, double escape_radius) {
  return green_dynamic(d, c, c, max_iter, escape_radius);
}

Complex boettcher_coordinate(int d, Complex c, Complex z, double precision, int max_iter) {
  check_degree(d);
  const double gz = green_dynamic(d, c, z, max_iter);
  if (gz == 0.0) fail(errc::inside_set, "point has bounded orbit; Boettcher coordinate undefined");
  const double g0 = green_dynamic(d, c, Complex{0.0, 0.0}, max_iter);
  if (g0 > 0.0 && gz <= g0)
    fail(errc::invalid_argument, "Boettcher coordinate only extends above the critical potential");

  // phi(z) = z * prod_j F_j^{1/d^j},  F_j = z_j / z_{j-1}^d = 1 + c z_{j-1}^{-d}.
  // The principal root at every step is the root closest to the previous
  // estimate; factors hugging the negative real axis mean the two nearest
  // roots are indistinguishable at this precision. Extended precision keeps
  // the deep near-boundary samples meaningful for landing extrapolation.
  using LComplex = std::complex<long double>;
  const long double stop_at = std::pow(10.0L, std::min(100.0L, 2400.0L / d));
  const LComplex cl(c.real(), c.imag());
  LComplex zj(z.real(), z.imag());
  long double log_abs = std::log(std::abs(zj));
  long double arg = std::arg(zj);
  long double weight = 1.0L;
  for (int j = 1; j <= max_iter; ++j) {
    LComplex zd{1.0L, 0.0L};
    {
      LComplex base = zj;
      int e = d;
      while (e) {
        if (e & 1) zd *= base;
        base *= base;
        e >>= 1;
      }
    }
    const LComplex next = zd + cl;
    const LComplex factor = next / zd;
    if (std::abs(factor) == 0.0L) fail(errc::no_convergence, "orbit hit a critical preimage");
    const long double fa = std::arg(factor);
    if (std::abs(std::abs(fa) - static_cast<long double>(M_PI)) < 0.005L &&
        std::abs(factor - LComplex{1.0L, 0.0L}) > 0.9L)
      fail(errc::no_convergence, "branch tracking ambiguous near the boundary");
    weight /= d;
    log_abs += weight * std::log(std::abs(factor));
    arg += weight * fa;
    zj = next;
    if (std::abs(zj) > stop_at) {
      // Remaining factors perturb by less than |c| / (|z|^{d-1} d^j).
      const long double tail = std::abs(cl) / std::pow(std::abs(zj), d - 1);
      if (tail < precision || tail < 1e-40L) break;
    }
    if (j == max_iter) fail(errc::no_convergence, "escape too slow for requested precision");
  }
  const long double mod = std::exp(log_abs);
  return Complex(static_cast<double>(mod * std::cos(arg)), static_cast<double>(mod * std::sin(arg)));
}

Complex phi_eval(int d, Complex c, double precision, int max_iter) {
  return boettcher_coordinate(d, c, c, precision, max_iter);
}

Complex tail_eval(const LaurentTail& tail, Complex w) {
  const Complex invw = 1.0 / w;
  Complex acc{0.0, 0.0};
  for (std::size_t m = tail.coeffs.size(); m-- > 0;)
    acc = acc * invw + Complex(to_double(tail.coeffs[m]), 0.0);
  return w + acc;
}

}  // namespace mbx
