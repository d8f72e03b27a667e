#include "multibrot/angles.hpp"
#include "multibrot/error.hpp"

#include "doctest.h"

#include <numeric>

using namespace mbx;

namespace {

// Brute-force orbit scan; deliberately avoids the closed-form path used by
// orbit_info so the two can disagree if either is wrong.
OrbitInfo orbit_by_enumeration(int d, Angle a) {
  std::vector<Angle> seen{a};
  for (;;) {
    a = tau(d, a);
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (seen[i] == a) {
        OrbitInfo info;
        info.preperiod = i;
        info.period = seen.size() - i;
        return info;
      }
    }
    seen.push_back(a);
  }
}

}  // namespace

TEST_SUITE("angles") {

TEST_CASE("construction reduces modulo 1") {
  CHECK(Angle(1, 3) == Angle(1, 3));
  CHECK(Angle(4, 3) == Angle(1, 3));
  CHECK(Angle(0, 7) == Angle(0, 1));
  CHECK(Angle(0, 7).str() == "0/1");
  CHECK(Angle(-1, 3) == Angle(2, 3));
  CHECK(Angle(6, -4) == Angle(1, 2));
  CHECK_THROWS_AS(Angle(1, 0), Error);
}

TEST_CASE("parse is lenient, str is exact") {
  CHECK(Angle::parse("1/3") == Angle(1, 3));
  CHECK(Angle::parse(" 7/3 ") == Angle(1, 3));
  CHECK(Angle::parse("-2/6") == Angle(2, 3));
  CHECK(Angle::parse("2") == Angle(0, 1));
  CHECK(Angle::parse("123456789123456789123456789/123456789123456789123456790").str() ==
        "123456789123456789123456789/123456789123456789123456790");
  CHECK_THROWS_AS(Angle::parse("1/0"), Error);
  CHECK_THROWS_AS(Angle::parse("x"), Error);
}

TEST_CASE("tau multiplies exactly") {
  CHECK(tau(2, Angle(1, 3)) == Angle(2, 3));
  CHECK(tau(2, Angle(2, 3)) == Angle(1, 3));
  CHECK(tau(3, Angle(1, 8)) == Angle(3, 8));
  CHECK_THROWS_AS(tau(1, Angle(1, 3)), Error);
}

TEST_CASE("orbit_info on pinned examples") {
  CHECK(orbit_info(2, Angle(1, 3)) == OrbitInfo{0, 2});
  CHECK(orbit_info(2, Angle(1, 2)) == OrbitInfo{1, 1});
  CHECK(orbit_info(2, Angle(0, 1)) == OrbitInfo{0, 1});
  for (int d = 2; d <= 5; ++d) {
    for (unsigned n = 2; n <= 5; ++n) {
      const Angle a(1, big_pow(d, n) - 1);
      const OrbitInfo info = orbit_info(d, a);
      CHECK(info.preperiod == 0);
      CHECK(info.period == n);
    }
  }
}

TEST_CASE("orbit_info matches enumeration for all denominators up to 60") {
  for (int d : {2, 3, 4}) {
    for (int q = 1; q <= 60; ++q) {
      for (int p = 0; p < q; ++p) {
        if (std::gcd(p, q) != 1) continue;
        const Angle a(p, q);
        CHECK(orbit_info(d, a) == orbit_by_enumeration(d, a));
      }
    }
  }
}

TEST_CASE("pure periodicity iff denominator coprime to d") {
  for (int d : {2, 3}) {
    for (int q = 1; q <= 1000; ++q) {
      const Angle a(1, q);
      const bool coprime = std::gcd(d, q) == 1;
      CHECK((orbit_info(d, a).preperiod == 0) == coprime);
    }
  }
}

TEST_CASE("period divides n for denominator d^n - 1") {
  for (int d : {2, 3}) {
    for (unsigned n = 2; n <= 6; ++n) {
      const BigInt den = big_pow(d, n) - 1;
      for (BigInt p = 0; p < den; ++p) {
        const auto info = orbit_info(d, Angle(p, den));
        CHECK(info.preperiod == 0);
        CHECK(n % info.period == 0);
      }
    }
  }
}

TEST_CASE("tau is a bijection on fixed coprime denominator") {
  const int d = 3;
  for (int q : {5, 7, 8, 11, 16}) {
    std::vector<Angle> image;
    std::vector<Angle> domain;
    for (int p = 0; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      domain.emplace_back(p, q);
      image.push_back(tau(d, domain.back()));
    }
    std::sort(image.begin(), image.end());
    CHECK(std::unique(image.begin(), image.end()) == image.end());
    std::sort(domain.begin(), domain.end());
    CHECK(image == domain);
  }
}

TEST_CASE("base-d digits on pinned examples") {
  CHECK(base_d_digits(2, Angle(1, 3), 4) == std::vector<int>{0, 1, 0, 1});
  CHECK(base_d_digits(3, Angle(1, 2), 3) == std::vector<int>{1, 1, 1});
  CHECK(base_d_digits(2, Angle(5, 8), 3) == std::vector<int>{1, 0, 1});
  CHECK(base_d_digits(2, Angle(5, 8), 6) == std::vector<int>{1, 0, 1, 0, 0, 0});
}

TEST_CASE("digits reconstruct the angle") {
  for (int d : {2, 3, 5}) {
    for (int q = 1; q <= 40; ++q) {
      for (int p = 0; p < std::min(q, 12); ++p) {
        const Angle a(p, q);
        const auto info = orbit_info(d, a);
        const auto digits = base_d_digits(d, a, info.preperiod + info.period);
        const std::vector<int> head(digits.begin(), digits.begin() + info.preperiod);
        const std::vector<int> rep(digits.begin() + info.preperiod, digits.end());
        CHECK(angle_from_digits(d, head, rep) == a);
      }
    }
  }
}

}  // TEST_SUITE
