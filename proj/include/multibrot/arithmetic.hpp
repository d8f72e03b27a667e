#pragma once

#include "multibrot/numeric.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mbx {

struct Factorization {
  std::vector<std::pair<BigInt, unsigned>> factors;  // sorted by prime
  BigInt value() const;
};

bool is_probable_prime(const BigInt& n);

// Trial division to 10^6 followed by Pollard rho (Brent). The budget counts
// rho iterations; exceeding it is an explicit error, never a silent result.
Factorization factorize(const BigInt& n, std::uint64_t rho_budget = 10'000'000);

// Multiplicative order of a modulo p (p prime, a not divisible by p), given
// that the order divides m.
unsigned multiplicative_order_dividing(const BigInt& a, const BigInt& p, unsigned m);

struct PrimitiveDivisorReport {
  BigInt a;
  unsigned m = 1;
  std::vector<BigInt> primitive_primes;  // p | a^m - 1 with ord_p(a) = m
  Factorization factorization;           // of a^m - 1
};

PrimitiveDivisorReport primitive_prime_divisors(const BigInt& a, unsigned m,
                                                std::uint64_t rho_budget = 10'000'000);

// Least M such that every m with M < m <= cap has a primitive prime divisor,
// verified exhaustively (cap >= 6 required; the classical exceptions stop at 6).
unsigned bang_bound(const BigInt& a, unsigned cap);

// The unique m with d^m - 1 <= D^k (d^2 - 1) < d^{m+1} - 1.
unsigned m_of_k(const BigInt& d, const BigInt& D, unsigned k);

struct ReplayRecord {
  unsigned k = 0;
  unsigned m = 0;
  BigInt prime;                                              // chosen primitive witness
  std::vector<BigInt> primitive_primes;
  std::vector<std::pair<unsigned, unsigned>> congruence_solutions;  // (n, r)
  bool only_trivial_solution = false;  // solutions == {(1, m-1)}
  bool wake_inequality = false;        // d^m-1 <= D^k(d^2-1) <= d(d^m-1)
  bool endpoint_excluded = false;      // D^k(d^2-1) equals neither d^m-1 nor d(d^m-1)
  bool contradiction = false;
  std::string flag;  // non-empty when the record could not be certified
};

struct ReplayReport {
  int d = 2;
  BigInt D;
  unsigned k_min = 0, k_max = 0;
  unsigned bang_M = 0;        // least M with a primitive prime for all M < m <= cap
  unsigned witness_M = 0;     // same, additionally requiring a prime coprime to D
  unsigned bang_scan_cap = 0;
  unsigned least_certified_k = 0;  // least k in range with m(k) > max(witness_M, 2); 0 if none
  std::vector<ReplayRecord> records;
};

// Replays the arithmetic contradiction: assuming the parameter rays
// R(D^k/(d^m-1)) and R(d D^k/(d^m-1)) land together, derives the forced
// period-1 landing, the wake inequality, and the impossible endpoint
// equalities, certified by a primitive prime coprime to D.
ReplayReport replay_theorem(int d, const BigInt& D, unsigned k_min, unsigned k_max);

}  // namespace mbx
