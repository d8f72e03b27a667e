#include "multibrot/rays.hpp"

#include "multibrot/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace mbx {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

const LaurentTail& cached_psi(int d) {
  static std::mutex mutex;
  static std::map<int, LaurentTail> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, psi_series(d, 2 * d + 8)).first;
  return it->second;
}

// Sequence acceleration for the landing point: iterated Aitken delta-squared
// on the tail of the samples (the contraction exponent is unknown, parabolic
// landings are slower than geometric).
Complex accelerate(std::vector<Complex> tail, double* spread) {
  while (tail.size() >= 3) {
    std::vector<Complex> next;
    for (std::size_t i = 0; i + 2 < tail.size(); ++i) {
      const Complex d1 = tail[i + 1] - tail[i];
      const Complex d2 = tail[i + 2] - 2.0 * tail[i + 1] + tail[i];
      if (std::abs(d2) < 1e-300) {
        next.push_back(tail[i + 2]);
      } else {
        next.push_back(tail[i + 2] - (d1 + d2) * (d1 + d2) / d2);
      }
    }
    tail = std::move(next);
  }
  if (spread) {
    *spread = tail.size() >= 2 ? std::abs(tail.back() - tail[tail.size() - 2]) : 0.0;
  }
  return tail.back();
}

void finish_landing(RayTrace& trace, double landing_tol) {
  const std::size_t want = std::min<std::size_t>(trace.samples.size(), 8);
  std::vector<Complex> tail;
  for (std::size_t i = trace.samples.size() - want; i < trace.samples.size(); ++i)
    tail.push_back(trace.samples[i].point);
  if (tail.size() < 3) {
    trace.landing_estimate = tail.back();
    trace.converged = false;
    return;
  }
  double spread = 0;
  trace.landing_estimate = accelerate(tail, &spread);
  // Compare against the acceleration of the shorter tail.
  std::vector<Complex> shorter(tail.begin() + 1, tail.end());
  const Complex other = accelerate(shorter, nullptr);
  const double delta = std::abs(trace.landing_estimate - other);
  trace.converged = delta < landing_tol;
  if (!trace.converged)
    trace.note = "landing extrapolants differ by " + std::to_string(delta);
}

Complex phi_with_retry(int d, Complex c, double precision) {
  return phi_eval(d, c, precision);
}

// One Newton solve of Phi(c) = target, derivative by central finite
// difference with step 1e-6 |c| (shrunk when a probe lands inside M_d).
// Near-parabolic targets have tiny |Phi'|, so the w-residual must be pushed
// to machine precision for the c-positions to stay clean.
Complex newton_solve(int d, Complex start, Complex target, int max_steps = 64) {
  Complex c = start;
  Complex best_c = start;
  const double scale = std::abs(target);
  double best_residual = std::numeric_limits<double>::infinity();
  for (int it = 0; it < max_steps; ++it) {
    Complex value;
    try {
      value = phi_with_retry(d, c, 1e-15);
    } catch (const Error&) {
      fail(errc::no_convergence, "Newton stepped inside the set");
    }
    const double residual = std::abs(value - target);
    if (residual < best_residual) {
      best_residual = residual;
      best_c = c;
    }
    if (residual < 3e-16 * scale) return c;
    double h = 1e-6 * std::max(std::abs(c), 1e-3);
    Complex derivative;
    bool have_derivative = false;
    for (int attempt = 0; attempt < 4 && !have_derivative; ++attempt, h *= 0.25) {
      try {
        const Complex hi = phi_with_retry(d, c + Complex(h, 0), 1e-15);
        const Complex lo = phi_with_retry(d, c - Complex(h, 0), 1e-15);
        derivative = (hi - lo) / (2 * h);
        have_derivative = std::abs(derivative) > 1e-300;
      } catch (const Error&) {
      }
    }
    if (!have_derivative) fail(errc::no_convergence, "derivative probe failed near the boundary");
    c -= (value - target) / derivative;
  }
  if (best_residual < 1e-12 * scale) return best_c;
  fail(errc::no_convergence, "Newton did not reach the ray target (residual " +
                                 std::to_string(best_residual) + ")");
}

}  // namespace

RayTrace trace_parameter_ray(int d, const Angle& theta, double potential_floor, int steps,
                             double landing_tol) {
  if (d < 2) fail(errc::invalid_argument, "degree must be at least 2");
  if (potential_floor <= 0) fail(errc::invalid_argument, "potential floor must be positive");
  if (steps < 1 || steps > 64) fail(errc::invalid_argument, "steps per halving out of range");

  RayTrace trace;
  trace.d = d;
  trace.theta = theta;
  trace.flagged_denominator = gcd(theta.den(), BigInt(d)) != 1;
  if (trace.flagged_denominator)
    trace.note = "denominator shares a factor with d; landing-pair uniqueness not guaranteed";

  const double angle = kTwoPi * theta.value();
  const double t0 = std::log(4.0);
  const double rho = std::pow(2.0, -1.0 / steps);

  // Seed from the inverse-uniformization series, then polish.
  Complex c = tail_eval(cached_psi(d), std::polar(std::exp(t0), angle));
  double t = t0;
  constexpr std::size_t kMaxSamples = 20000;
  while (true) {
    const Complex target = std::polar(std::exp(t), angle);
    try {
      c = newton_solve(d, c, target);
    } catch (const Error& e) {
      if (trace.samples.empty()) throw;
      trace.note = std::string("trace stopped early: ") + e.what();
      break;
    }
    trace.samples.push_back({t, c});
    if (t <= potential_floor || trace.samples.size() >= kMaxSamples) break;
    t = std::max(t * rho, potential_floor * (1 - 1e-12));
  }
  if (trace.samples.empty()) fail(errc::no_convergence, "ray trace produced no samples");
  finish_landing(trace, landing_tol);
  return trace;
}

RayTrace trace_dynamic_ray(int d, Complex c, const Angle& theta, double potential_floor,
                           int steps, double landing_tol) {
  if (d < 2) fail(errc::invalid_argument, "degree must be at least 2");
  if (potential_floor <= 0) fail(errc::invalid_argument, "potential floor must be positive");
  if (steps < 1 || steps > 64) fail(errc::invalid_argument, "steps per depth out of range");

  const double g0 = green_dynamic(d, c, Complex{0.0, 0.0});
  if (g0 > 0 && potential_floor <= g0)
    fail(errc::invalid_argument,
         "potential floor " + std::to_string(potential_floor) +
             " is at or below the critical potential " + std::to_string(g0));

  RayTrace trace;
  trace.d = d;
  trace.theta = theta;
  trace.dynamic = true;
  trace.c = c;

  const double angle = kTwoPi * theta.value();
  const double t0 = std::log(16.0 + 2.0 * std::abs(c));
  const double rho = std::pow(static_cast<double>(d), -1.0 / steps);

  std::vector<Complex> pts;
  std::vector<double> ts;
  constexpr std::size_t kMaxSamples = 40000;
  for (std::size_t j = 0; j < kMaxSamples; ++j) {
    const double t = std::max(t0 * std::pow(rho, static_cast<double>(j)),
                              potential_floor * (1 - 1e-12));
    Complex z;
    if (j <= static_cast<std::size_t>(steps)) {
      // Seed region: solve phi_c(z) = e^{t + i angle} by Newton from the
      // asymptotic value (phi is near the identity out here).
      const Complex target = std::polar(std::exp(t), angle);
      z = target;
      for (int it = 0; it < 24; ++it) {
        const Complex value = boettcher_coordinate(d, c, z, 1e-13);
        if (std::abs(value - target) < 1e-12 * std::abs(target)) break;
        const double h = 1e-6 * std::max(std::abs(z), 1e-3);
        const Complex hi = boettcher_coordinate(d, c, z + Complex(h, 0), 1e-13);
        const Complex lo = boettcher_coordinate(d, c, z - Complex(h, 0), 1e-13);
        z -= (value - target) * (2 * h) / (hi - lo);
      }
    } else {
      // Pull back the sample s levels up: f(z(t)) = z(d t).
      const Complex up = pts[j - steps];
      const Complex prev = pts[j - 1];
      const Complex w = up - c;
      const double mod = std::pow(std::abs(w), 1.0 / d);
      const double base_arg = std::arg(w) / d;
      double best = std::numeric_limits<double>::infinity();
      for (int b = 0; b < d; ++b) {
        const Complex cand = std::polar(mod, base_arg + kTwoPi * b / d);
        // Nearest branch; ties broken by argument difference.
        const double dist = std::abs(cand - prev);
        const double tie = std::abs(std::remainder(std::arg(cand) - std::arg(prev), kTwoPi));
        const double score = dist + 1e-12 * tie;
        if (score < best) {
          best = score;
          z = cand;
        }
      }
    }
    pts.push_back(z);
    ts.push_back(t);
    if (t <= potential_floor * (1 + 1e-9)) break;
  }
  for (std::size_t j = 0; j < pts.size(); ++j) trace.samples.push_back({ts[j], pts[j]});
  finish_landing(trace, landing_tol);
  return trace;
}

LandingPair verify_landing_pair(int d, const Angle& theta, const Angle& theta_prime,
                                double tol) {
  if (theta == theta_prime) fail(errc::invalid_argument, "angles must differ");
  const OrbitInfo o1 = orbit_info(d, theta);
  const OrbitInfo o2 = orbit_info(d, theta_prime);
  if (o1.preperiod != 0 || o2.preperiod != 0)
    fail(errc::invalid_argument, "landing pairs require periodic angles");

  const double floor = std::min(1e-6, tol * tol);
  const RayTrace r1 = trace_parameter_ray(d, theta, floor, 4, tol);
  const RayTrace r2 = trace_parameter_ray(d, theta_prime, floor, 4, tol);
  if (!r1.converged || !r2.converged)
    fail(errc::no_convergence, "a ray trace failed to converge: " +
                                   (r1.converged ? r2.note : r1.note));
  LandingPair pair;
  pair.d = d;
  pair.theta = theta;
  pair.theta_prime = theta_prime;
  pair.disagreement = std::abs(r1.landing_estimate - r2.landing_estimate);
  if (pair.disagreement > tol)
    fail(errc::no_convergence, "landing estimates disagree by " +
                                   std::to_string(pair.disagreement) + " (tol " +
                                   std::to_string(tol) + ")");
  pair.landing_point = 0.5 * (r1.landing_estimate + r2.landing_estimate);
  pair.period = static_cast<unsigned>(o1.period);
  return pair;
}

Prop35Result prop35_check(int d, int n, double tol) {
  if (n < 2) fail(errc::invalid_argument, "need n >= 2");
  const BigInt den = big_pow(d, static_cast<unsigned>(n)) - 1;
  Prop35Result out;
  out.pair = verify_landing_pair(d, Angle(1, den), Angle(d, den), tol);

  double best = std::numeric_limits<double>::infinity();
  for (const ParabolicParam& pp : parabolic_boundary(d, n)) {
    const double dist = std::abs(pp.c - out.pair.landing_point);
    if (dist < best) {
      best = dist;
      out.witness = pp;
    }
  }
  out.witness_distance = best;
  if (best > tol)
    fail(errc::no_convergence, "no parabolic boundary parameter matches the landing point within " +
                                   std::to_string(tol));
  return out;
}

bool wake_contains(int d, const LandingPair& pair, Complex point) {
  // Polyline: far extension, ray theta inward, landing point, ray theta'
  // outward, far extension.
  const RayTrace r1 = trace_parameter_ray(d, pair.theta, 1e-6, 4);
  const RayTrace r2 = trace_parameter_ray(d, pair.theta_prime, 1e-6, 4);

  std::vector<Complex> curve;
  auto far_extension = [&](const Angle& theta, bool reversed) {
    std::vector<Complex> ext;
    const double angle = kTwoPi * theta.value();
    for (double radius : {4096.0, 256.0, 64.0, 16.0, 8.0})
      ext.push_back(tail_eval(cached_psi(d), std::polar(radius, angle)));
    if (reversed) std::reverse(ext.begin(), ext.end());
    return ext;
  };
  for (const Complex& z : far_extension(pair.theta, false)) curve.push_back(z);
  for (const RaySample& s : r1.samples) curve.push_back(s.point);
  curve.push_back(pair.landing_point);
  for (auto it = r2.samples.rbegin(); it != r2.samples.rend(); ++it) curve.push_back(it->point);
  for (const Complex& z : far_extension(pair.theta_prime, true)) curve.push_back(z);

  // Crossing parity of the segment origin -> point.
  const Complex a{0.0, 0.0};
  const Complex b = point;
  auto cross = [](const Complex& u, const Complex& v) {
    return u.real() * v.imag() - u.imag() * v.real();
  };
  auto seg_dist = [&](const Complex& p, const Complex& q, const Complex& x) {
    const Complex pq = q - p;
    const double len2 = std::norm(pq);
    double t = len2 == 0 ? 0.0 : ((x - p).real() * pq.real() + (x - p).imag() * pq.imag()) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(x - (p + t * pq));
  };
  int crossings = 0;
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    const Complex p = curve[i], q = curve[i + 1];
    if (seg_dist(p, q, point) < 1e-7)
      fail(errc::too_close, "point is too close to the ray curve to decide");
    const double d1 = cross(b - a, p - a);
    const double d2 = cross(b - a, q - a);
    const double d3 = cross(q - p, a - p);
    const double d4 = cross(q - p, b - p);
    if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0))) ++crossings;
  }
  return crossings % 2 == 1;
}

}  // namespace mbx
