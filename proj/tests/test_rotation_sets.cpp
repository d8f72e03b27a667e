#include "multibrot/rotation_sets.hpp"
#include "multibrot/error.hpp"

#include "doctest.h"

using namespace mbx;

namespace {

std::vector<Angle> angles_of(std::initializer_list<const char*> strs) {
  std::vector<Angle> out;
  for (const char* s : strs) out.push_back(Angle::parse(s));
  return out;
}

}  // namespace

TEST_SUITE("rotation-sets") {

TEST_CASE("recognize the period-2 doubling pair") {
  const RotationSet s = recognize(2, angles_of({"1/3", "2/3"}));
  CHECK(s.rotation_number == Rational(1, 2));
  CHECK(s.k == 1);
  CHECK(s.deployment == std::vector<std::int64_t>{2});
}

TEST_CASE("recognize the canonical 1/n family member") {
  for (int d : {2, 3, 4}) {
    for (unsigned n : {2u, 3u, 4u}) {
      const BigInt den = big_pow(d, n) - 1;
      std::vector<Angle> angles;
      for (unsigned j = 0; j < n; ++j) angles.emplace_back(big_pow(d, j), den);
      const RotationSet s = recognize(d, angles);
      CHECK(s.rotation_number == Rational(1, n));
      CHECK(s.k == 1);
      for (auto entry : s.deployment) CHECK(entry == static_cast<std::int64_t>(n));
    }
  }
}

TEST_CASE("recognize rejects non-invariant and non-rotation sets") {
  CHECK_THROWS_AS(recognize(2, angles_of({"1/3", "1/2"})), Error);
  // 1/5 -> 2/5 -> 4/5 -> 3/5 is a single 4-cycle but not a rotation set.
  try {
    recognize(2, angles_of({"1/5", "2/5", "3/5", "4/5"}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::not_rotation_set);
  }
}

TEST_CASE("deployment counts use half-open windows") {
  CHECK(deployment_sequence(2, angles_of({"1/3", "2/3"})) == std::vector<std::int64_t>{2});
  // {1/8, 3/8} is tau_3-invariant: 1/8 -> 3/8 -> 9/8 = 1/8.
  CHECK(deployment_sequence(3, angles_of({"1/8", "3/8"})) == std::vector<std::int64_t>{2, 2});
  CHECK(deployment_sequence(3, angles_of({"5/8", "7/8"})) == std::vector<std::int64_t>{0, 2});
  // An angle exactly at a partition point is not counted below it.
  CHECK(deployment_sequence(3, angles_of({"0/1", "1/2"})) == std::vector<std::int64_t>{1, 2});
}

TEST_CASE("construct pinned examples") {
  CHECK(construct(2, Rational(1, 2), {2}).angles == angles_of({"1/3", "2/3"}));
  CHECK(construct(3, Rational(1, 2), {0, 2}).angles == angles_of({"5/8", "7/8"}));
  for (int d : {2, 3, 4}) {
    for (unsigned n : {2u, 3u}) {
      std::vector<std::int64_t> dep(d - 1, n);
      const RotationSet s = construct(d, Rational(1, n), dep);
      const BigInt den = big_pow(d, n) - 1;
      REQUIRE(s.angles.size() == n);
      for (unsigned j = 0; j < n; ++j) CHECK(s.angles[j] == Angle(big_pow(d, j), den));
    }
  }
}

TEST_CASE("construct rejects malformed and unrealizable data") {
  CHECK_THROWS_AS(construct(2, Rational(1, 2), {2, 2}), Error);   // wrong length
  CHECK_THROWS_AS(construct(3, Rational(1, 2), {2, 1}), Error);   // decreasing
  CHECK_THROWS_AS(construct(2, Rational(1, 2), {3}), Error);      // n not multiple of q
  CHECK_THROWS_AS(construct(2, Rational(1, 3), {6}), Error);      // k = 2 > d-1
  // k = 2, classes mod 2 must both appear among deployment entries.
  try {
    construct(3, Rational(1, 2), {0, 4});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::unrealizable);
  }
}

TEST_CASE("brute force enumeration of small cases") {
  const auto d2q2 = brute_force_enumerate(2, 2);
  // {0} (fixed), and the unique period-2 pair {1/3, 2/3}.
  REQUIRE(d2q2.size() == 2);
  CHECK(d2q2[0].angles == angles_of({"0/1"}));
  CHECK(d2q2[1].angles == angles_of({"1/3", "2/3"}));

  const auto d2q1 = brute_force_enumerate(2, 1);
  REQUIRE(d2q1.size() == 1);
  CHECK(d2q1[0].angles == angles_of({"0/1"}));
  CHECK(d2q1[0].rotation_number == Rational(0, 1));

  const auto d3q2 = brute_force_enumerate(3, 2);
  bool has_18_38 = false, has_58_78 = false;
  for (const auto& s : d3q2) {
    if (s.angles == angles_of({"1/8", "3/8"})) has_18_38 = true;
    if (s.angles == angles_of({"5/8", "7/8"})) has_58_78 = true;
  }
  CHECK(has_18_38);
  CHECK(has_58_78);

  CHECK_THROWS_AS(brute_force_enumerate(5, 10), Error);  // guard
}

TEST_CASE("Goldberg uniqueness: construct round-trips every enumerated set") {
  for (int d = 2; d <= 4; ++d) {
    for (unsigned q = 1; q <= 6; ++q) {
      const auto all = brute_force_enumerate(d, q);
      for (const auto& s : all) {
        const RotationSet rebuilt = construct(d, s.rotation_number, s.deployment);
        CHECK(rebuilt == s);
        CHECK(rebuilt.k == s.k);
      }
    }
  }
}

TEST_CASE("every constructed set passes recognize and has k cycles") {
  for (int d = 2; d <= 4; ++d) {
    const auto all = brute_force_enumerate(d, 4);
    for (const auto& s : all) {
      const RotationSet again = recognize(d, s.angles);
      CHECK(again.rotation_number == s.rotation_number);
      CHECK(again.k == s.k);
      // Count cycles directly.
      std::vector<Angle> pool = s.angles;
      unsigned cycles = 0;
      while (!pool.empty()) {
        ++cycles;
        Angle a = pool.front();
        Angle x = a;
        do {
          pool.erase(std::find(pool.begin(), pool.end(), x));
          x = tau(d, x);
        } while (!(x == a));
      }
      CHECK(cycles == s.k);
    }
  }
}

TEST_CASE("prop35 family shape") {
  const auto f22 = prop35_family(2, 2);
  REQUIRE(f22.size() == 1);
  CHECK(f22[0].angles == angles_of({"1/3", "2/3"}));

  const auto f32 = prop35_family(3, 2);
  REQUIRE(f32.size() == 2);
  CHECK(f32[0].angles == angles_of({"1/8", "3/8"}));
  CHECK(f32[1].angles == angles_of({"5/8", "7/8"}));

  for (int d = 2; d <= 5; ++d) {
    for (unsigned n = 2; n <= 4; ++n) {
      const auto family = prop35_family(d, n);
      CHECK(family.size() == static_cast<std::size_t>(d - 1));
      for (const auto& s : family) {
        CHECK(s.rotation_number == Rational(1, n));
        for (auto entry : s.deployment)
          CHECK((entry == 0 || entry == static_cast<std::int64_t>(n)));
      }
      // First member is the canonical family F.
      const BigInt den = big_pow(d, n) - 1;
      for (unsigned j = 0; j < n; ++j) CHECK(family[0].angles[j] == Angle(big_pow(d, j), den));
    }
  }
}

}  // TEST_SUITE
