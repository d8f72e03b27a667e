#pragma once

#include "multibrot/numeric.hpp"

#include <cstddef>
#include <vector>

namespace mbx {

// Truncated power series sum_{j=0}^{order} c_j x^j over exact rationals.
// All operations truncate consistently at the common order.
class RatSeries {
 public:
  explicit RatSeries(std::size_t order) : c_(order + 1) {}
  static RatSeries constant(const Rational& v, std::size_t order);

  std::size_t order() const { return c_.size() - 1; }
  const Rational& operator[](std::size_t j) const { return c_[j]; }
  Rational& operator[](std::size_t j) { return c_[j]; }

  RatSeries& operator+=(const RatSeries& o);
  RatSeries& operator-=(const RatSeries& o);
  friend RatSeries operator+(RatSeries a, const RatSeries& b) { return a += b; }
  friend RatSeries operator-(RatSeries a, const RatSeries& b) { return a -= b; }
  friend RatSeries operator*(const RatSeries& a, const RatSeries& b);

  RatSeries& scale(const Rational& v);
  RatSeries shifted(std::size_t up) const;  // multiply by x^up

  RatSeries inverse() const;                  // needs c_0 != 0
  RatSeries log() const;                      // needs c_0 == 1
  RatSeries exp() const;                      // needs c_0 == 0
  RatSeries pow_int(unsigned e) const;
  RatSeries pow_rational(const Rational& e) const;  // needs c_0 == 1

  bool operator==(const RatSeries&) const = default;

 private:
  std::vector<Rational> c_;
};

}  // namespace mbx
