#include "multibrot/arithmetic.hpp"

#include "multibrot/error.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>

namespace mbx {

namespace {

BigInt mod_pow(BigInt base, BigInt exp, const BigInt& mod) {
  BigInt out = 1;
  base %= mod;
  while (exp > 0) {
    if ((exp & 1) != 0) out = out * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return out;
}

bool miller_rabin_witness(const BigInt& n, const BigInt& a, const BigInt& d, unsigned r) {
  BigInt x = mod_pow(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < r; ++i) {
    x = x * x % n;
    if (x == n - 1) return false;
  }
  return true;  // composite witness
}

BigInt pollard_brent(const BigInt& n, std::uint64_t& budget, std::uint64_t seed) {
  // Brent's cycle variant of Pollard rho; returns a nontrivial factor or 0.
  if (n % 2 == 0) return 2;
  const BigInt c = 1 + BigInt(seed) % (n - 1);
  BigInt y = 2 + BigInt(seed * 0x9e3779b97f4a7c15ull) % (n - 2);
  BigInt g = 1, r = 1, q = 1, x = 0, ys = 0;
  const unsigned batch = 128;
  while (g == 1) {
    x = y;
    for (BigInt i = 0; i < r; ++i) y = (y * y + c) % n;
    BigInt k = 0;
    while (k < r && g == 1) {
      ys = y;
      const BigInt limit = std::min(BigInt(batch), BigInt(r - k));
      for (BigInt i = 0; i < limit; ++i) {
        if (budget == 0) fail(errc::budget_exceeded, "factorization budget exceeded");
        --budget;
        y = (y * y + c) % n;
        BigInt diff = x > y ? x - y : y - x;
        if (diff == 0) diff = 1;
        q = q * diff % n;
      }
      g = gcd(q, n);
      k += batch;
    }
    r *= 2;
  }
  if (g == n) {
    // Backtrack one step at a time.
    do {
      if (budget == 0) fail(errc::budget_exceeded, "factorization budget exceeded");
      --budget;
      ys = (ys * ys + c) % n;
      BigInt diff = x > ys ? x - ys : ys - x;
      if (diff == 0) return 0;
      g = gcd(diff, n);
    } while (g == 1);
  }
  return g == n ? BigInt(0) : g;
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out, std::uint64_t& budget);

void split_composite(const BigInt& n, std::map<BigInt, unsigned>& out, std::uint64_t& budget) {
  for (std::uint64_t seed = 1; seed <= 64; ++seed) {
    const BigInt f = pollard_brent(n, budget, seed);
    if (f != 0 && f != 1 && f != n) {
      factor_into(f, out, budget);
      factor_into(n / f, out, budget);
      return;
    }
  }
  fail(errc::budget_exceeded, "pollard rho failed to split " + n.str());
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out, std::uint64_t& budget) {
  if (n <= 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  split_composite(n, out, budget);
}

}  // namespace

BigInt Factorization::value() const {
  BigInt v = 1;
  for (const auto& [p, e] : factors) v *= big_pow(p, e);
  return v;
}

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  BigInt d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // Deterministic for n < 3.3 * 10^24; overwhelming confidence beyond.
  for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (miller_rabin_witness(n, a, d, r)) return false;
  }
  return true;
}

Factorization factorize(const BigInt& n, std::uint64_t rho_budget) {
  if (n < 1) fail(errc::invalid_argument, "factorize expects a positive integer");
  std::map<BigInt, unsigned> acc;
  BigInt rest = n;
  const BigInt u64_max = BigInt(std::numeric_limits<std::uint64_t>::max());
  std::uint64_t p = 2;
  while (p <= 1'000'000 && rest > 1 && rest > u64_max) {
    if (BigInt(p) * p > rest) break;
    while (rest % p == 0) {
      ++acc[BigInt(p)];
      rest /= p;
    }
    p += (p == 2 ? 1 : 2);
  }
  if (rest > 1 && rest <= u64_max) {
    std::uint64_t r = rest.convert_to<std::uint64_t>();
    while (p <= 1'000'000 && r > 1) {
      if (p * p > r) break;
      while (r % p == 0) {
        ++acc[BigInt(p)];
        r /= p;
      }
      p += (p == 2 ? 1 : 2);
    }
    rest = r;
  }
  if (rest > 1) {
    if (rest < BigInt(1'000'000) * 1'000'000) {
      ++acc[rest];  // below the trial bound squared, so prime
    } else {
      factor_into(rest, acc, rho_budget);
    }
  }
  Factorization out;
  out.factors.assign(acc.begin(), acc.end());
  if (out.value() != n) fail(errc::invalid_argument, "internal: factorization self-check failed");
  return out;
}

unsigned multiplicative_order_dividing(const BigInt& a, const BigInt& p, unsigned m) {
  if (mod_pow(a, m, p) != 1) fail(errc::invalid_argument, "order does not divide m");
  unsigned order = m;
  // Strip each prime of m while the power still maps to 1.
  unsigned rest = m;
  for (unsigned q = 2; q * q <= rest; ++q) {
    while (rest % q == 0) {
      rest /= q;
      while (order % q == 0 && mod_pow(a, order / q, p) == 1) order /= q;
    }
  }
  if (rest > 1)
    while (order % rest == 0 && mod_pow(a, order / rest, p) == 1) order /= rest;
  return order;
}

PrimitiveDivisorReport primitive_prime_divisors(const BigInt& a, unsigned m,
                                                std::uint64_t rho_budget) {
  if (a < 2 || m < 1) fail(errc::invalid_argument, "need a >= 2 and m >= 1");
  static std::mutex cache_mutex;
  static std::map<std::pair<BigInt, unsigned>, PrimitiveDivisorReport> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find({a, m});
    if (it != cache.end()) return it->second;
  }
  PrimitiveDivisorReport out;
  out.a = a;
  out.m = m;
  const BigInt n = big_pow(a, m) - 1;
  if (n > 1) {
    out.factorization = factorize(n, rho_budget);
    for (const auto& [p, e] : out.factorization.factors) {
      if (multiplicative_order_dividing(a, p, m) == m) out.primitive_primes.push_back(p);
    }
  }
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache.emplace(std::make_pair(a, m), out);
  return out;
}

unsigned bang_bound(const BigInt& a, unsigned cap) {
  if (cap < 6) fail(errc::budget_exceeded, "cap must reach past the classical exceptions (>= 6)");
  unsigned worst = 1;
  for (unsigned m = 1; m <= cap; ++m) {
    if (primitive_prime_divisors(a, m).primitive_primes.empty()) worst = std::max(worst, m);
  }
  return worst;
}

unsigned m_of_k(const BigInt& d, const BigInt& D, unsigned k) {
  if (d < 2 || D < 2) fail(errc::invalid_argument, "need d, D >= 2");
  const BigInt target = big_pow(D, k) * (d * d - 1);
  unsigned m = 1;
  BigInt dm = d;  // d^m
  while (!(dm - 1 <= target && target < dm * d - 1)) {
    ++m;
    dm *= d;
    if (m > 1'000'000) fail(errc::budget_exceeded, "m(k) search ran away");
  }
  return m;
}

ReplayReport replay_theorem(int d, const BigInt& D, unsigned k_min, unsigned k_max) {
  if (d < 2 || D < 2) fail(errc::invalid_argument, "need d, D >= 2");
  if (k_min > k_max) fail(errc::invalid_argument, "empty k range");
  ReplayReport report;
  report.d = d;
  report.D = D;
  report.k_min = k_min;
  report.k_max = k_max;

  const unsigned m_top = m_of_k(d, D, k_max);
  report.bang_scan_cap = std::max(m_top, 7u);
  report.bang_M = bang_bound(d, report.bang_scan_cap);
  // The paper's M: past it, d^m - 1 has a primitive prime coprime to D.
  report.witness_M = 1;
  for (unsigned m = 1; m <= report.bang_scan_cap; ++m) {
    bool has_witness = false;
    for (const BigInt& p : primitive_prime_divisors(d, m).primitive_primes) {
      if (D % p != 0) {
        has_witness = true;
        break;
      }
    }
    if (!has_witness) report.witness_M = std::max(report.witness_M, m);
  }

  for (unsigned k = k_min; k <= k_max; ++k) {
    ReplayRecord rec;
    rec.k = k;
    rec.m = m_of_k(d, D, k);
    const unsigned m = rec.m;
    const BigInt modulus = big_pow(d, m) - 1;
    const BigInt Dk = big_pow(D, k);

    const auto bang = primitive_prime_divisors(d, m);
    rec.primitive_primes = bang.primitive_primes;

    // Smallest primitive prime coprime to D, for determinism.
    for (const BigInt& p : bang.primitive_primes) {
      if (D % p != 0) {
        rec.prime = p;
        break;
      }
    }
    if (rec.prime == 0) {
      rec.flag = bang.primitive_primes.empty() ? "no primitive prime divisor"
                                               : "no coprime witness";
      report.records.push_back(std::move(rec));
      continue;
    }
    if (m <= 2) {
      // Primitivity only rules out p | d^j - 1 for j < m; excluding the wake
      // endpoints needs p coprime to d^2 - 1, automatic once m > 2.
      if ((d * d - 1) % rec.prime == 0) {
        rec.flag = "m(k) <= 2: witness divides d^2 - 1";
        report.records.push_back(std::move(rec));
        continue;
      }
    }

    // All (n, r) with n | m, 0 <= r < m/n and D^k (d^{rn+1} - 1) = 0 mod d^m-1.
    for (unsigned n = 1; n <= m; ++n) {
      if (m % n != 0) continue;
      for (unsigned r = 0; r * n < m; ++r) {
        const BigInt lhs = Dk % modulus * ((big_pow(d, r * n + 1) - 1) % modulus) % modulus;
        if (lhs == 0) rec.congruence_solutions.emplace_back(n, r);
      }
    }
    rec.only_trivial_solution =
        rec.congruence_solutions.size() == 1 && rec.congruence_solutions[0].first == 1 &&
        rec.congruence_solutions[0].second == m - 1;

    // Wake inequality 1/(d^2-1) <= D^k/(d^m-1) <= d/(d^2-1), exact.
    const BigInt lhs = Dk * (d * d - 1);
    rec.wake_inequality = modulus <= lhs && lhs <= d * modulus;

    // The two admissible endpoint equalities are impossible: p divides d^m-1
    // but neither D^k nor d^2-1.
    const bool eq_low = lhs == modulus;
    const bool eq_high = lhs == d * modulus;
    rec.endpoint_excluded = !eq_low && !eq_high;

    rec.contradiction = rec.only_trivial_solution && rec.wake_inequality && rec.endpoint_excluded;
    if (!rec.contradiction && rec.flag.empty()) rec.flag = "replay steps incomplete";
    report.records.push_back(std::move(rec));
  }

  for (unsigned k = k_min; k <= k_max; ++k) {
    if (m_of_k(d, D, k) > std::max(report.witness_M, 2u)) {
      report.least_certified_k = k;
      break;
    }
  }
  return report;
}

}  // namespace mbx
