#include "multibrot/arithmetic.hpp"
#include "multibrot/error.hpp"

#include "doctest.h"

#include <set>

using namespace mbx;

namespace {

// Independent order computation by plain iteration.
unsigned order_by_iteration(const BigInt& a, const BigInt& p) {
  BigInt t = a % p;
  unsigned n = 1;
  while (t != 1) {
    t = t * a % p;
    ++n;
  }
  return n;
}

}  // namespace

TEST_SUITE("arithmetic") {

TEST_CASE("factorization self-check on assorted values") {
  for (const char* s : {"2", "97", "6300", "104729", "999999999989", "614889782588491410",
                        "18446744073709551617"}) {
    const BigInt n(s);
    const Factorization f = factorize(n);
    CHECK(f.value() == n);
    for (const auto& [p, e] : f.factors) CHECK(is_probable_prime(p));
  }
  CHECK(factorize(big_pow(2, 64) + 1).factors.size() == 2);  // 274177 * 67280421310721
}

TEST_CASE("primitive prime divisors: pinned examples") {
  const auto r25 = primitive_prime_divisors(2, 5);
  REQUIRE(r25.primitive_primes.size() == 1);
  CHECK(r25.primitive_primes[0] == 31);

  // The classical Bang exception: 63 = 7 * 3^2, 7 | 2^3-1 and 3 | 2^2-1.
  CHECK(primitive_prime_divisors(2, 6).primitive_primes.empty());
  CHECK(primitive_prime_divisors(3, 2).primitive_primes.empty());  // 8 = 2^3, 2 | 3-1
  CHECK(primitive_prime_divisors(2, 1).primitive_primes.empty());  // 2^1-1 = 1
}

TEST_CASE("order law: reported primitive primes have order exactly m") {
  for (int a : {2, 3, 5, 6}) {
    for (unsigned m = 1; m <= 16; ++m) {
      const auto rep = primitive_prime_divisors(a, m);
      std::set<BigInt> primitive(rep.primitive_primes.begin(), rep.primitive_primes.end());
      for (const auto& [p, e] : rep.factorization.factors) {
        const unsigned ord = order_by_iteration(a, p);
        CHECK((ord == m) == primitive.count(p));
      }
    }
  }
}

TEST_CASE("bang_bound pinned and guarded") {
  CHECK(bang_bound(2, 50) == 6);
  CHECK(bang_bound(3, 50) == 2);
  CHECK(bang_bound(4, 30) == 1);  // 4^m - 1 always has a primitive prime (3 at m=1)
  CHECK_THROWS_AS(bang_bound(2, 5), Error);
}

TEST_CASE("m_of_k pinned examples and monotonicity") {
  CHECK(m_of_k(2, 3, 5) == 9);   // 511 <= 729 < 1023
  CHECK(m_of_k(2, 2, 0) == 2);   // 3 <= 3 < 7
  CHECK(m_of_k(3, 2, 3) == 3);   // 26 <= 64 < 80
  for (int d = 2; d <= 6; ++d) {
    for (int D = 2; D <= 6; ++D) {
      unsigned prev = m_of_k(d, D, 0);
      for (unsigned k = 1; k <= 24; ++k) {
        const unsigned cur = m_of_k(d, D, k);
        CHECK(cur >= prev);
        // d^{m(k)} <= d * D * d^{m(k-1)}
        CHECK(big_pow(d, cur) <= BigInt(d) * D * big_pow(d, prev));
        prev = cur;
      }
    }
  }
}

TEST_CASE("replay: d=2, D=3, k=5 uses m=9 and p=73") {
  const ReplayReport rep = replay_theorem(2, 3, 5, 5);
  REQUIRE(rep.records.size() == 1);
  const ReplayRecord& rec = rep.records[0];
  CHECK(rec.m == 9);
  CHECK(rec.prime == 73);  // 511 = 7 * 73; ord(2 mod 73) = 9; 73 does not divide 3
  CHECK(rec.only_trivial_solution);
  REQUIRE(rec.congruence_solutions.size() == 1);
  CHECK(rec.congruence_solutions[0] == std::pair<unsigned, unsigned>{1, 8});
  CHECK(rec.wake_inequality);
  CHECK(rec.endpoint_excluded);
  CHECK(rec.contradiction);
}

TEST_CASE("replay: the h-degree == multibrot-degree case also fails") {
  const ReplayReport rep = replay_theorem(2, 2, 2, 10);
  for (const auto& rec : rep.records) {
    if (rec.m > rep.witness_M && rec.m > 2) CHECK(rec.contradiction);
  }
  CHECK(rep.least_certified_k > 0);
}

TEST_CASE("replay certifies every k past the witness bound for small d, D") {
  for (int d = 2; d <= 4; ++d) {
    for (int D = 2; D <= 4; ++D) {
      const ReplayReport rep = replay_theorem(d, D, 0, 12);
      for (const auto& rec : rep.records) {
        if (rec.m > std::max(rep.witness_M, 2u)) {
          CHECK(rec.contradiction);
          CHECK(rec.flag.empty());
        }
      }
    }
  }
}

TEST_CASE("replay flags the witness gap at (d, D) = (3, 5)") {
  // 3^4 - 1 = 80 = 2^4 * 5 whose only primitive prime is 5 = D; the record at
  // m(k) = 4 cannot be certified and must say so rather than claim success.
  const ReplayReport rep = replay_theorem(3, 5, 2, 2);
  REQUIRE(rep.records.size() == 1);
  CHECK(rep.records[0].m == 4);
  CHECK(rep.records[0].flag == "no coprime witness");
  CHECK_FALSE(rep.records[0].contradiction);
  CHECK(rep.witness_M >= 4);
}

}  // TEST_SUITE
