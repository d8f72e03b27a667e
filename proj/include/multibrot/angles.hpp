#pragma once

#include "multibrot/numeric.hpp"

#include <compare>
#include <cstdint>
#include <vector>

namespace mbx {

// Rational angle in [0,1), always stored reduced. Value type, freely shareable
// across threads. Equality is exact; nothing is ever rounded.
class Angle {
 public:
  Angle() = default;  // 0/1
  Angle(BigInt num, BigInt den);
  explicit Angle(const Rational& r);

  static Angle parse(std::string_view s);  // lenient: unreduced / out-of-range allowed

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  Rational rational() const { return Rational(num_, den_); }
  double value() const;
  std::string str() const;  // exact "p/q"

  friend bool operator==(const Angle& a, const Angle& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Angle& a, const Angle& b) {
    const BigInt lhs = a.num_ * b.den_, rhs = b.num_ * a.den_;
    return lhs < rhs ? std::strong_ordering::less
           : lhs > rhs ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
  }

 private:
  BigInt num_{0};
  BigInt den_{1};
};

struct OrbitInfo {
  std::uint64_t preperiod = 0;  // 0 iff the angle is periodic
  std::uint64_t period = 1;
  friend bool operator==(const OrbitInfo&, const OrbitInfo&) = default;
};

// d * a mod 1, exact.
Angle tau(int d, const Angle& a);

// Minimal preperiod and period of a under tau.
OrbitInfo orbit_info(int d, const Angle& a);

// First len digits of the base-d expansion, digit_k = floor(d * tau_d^k(a)).
// Terminating expansions use the terminating form.
std::vector<int> base_d_digits(int d, const Angle& a, std::size_t len);

// Angle with the given eventually periodic base-d expansion (used by the
// rotation-set construction and by reconstruction checks).
Angle angle_from_digits(int d, const std::vector<int>& preperiodic, const std::vector<int>& periodic);

}  // namespace mbx
