#include "multibrot/power_series.hpp"

#include "multibrot/error.hpp"

namespace mbx {

RatSeries RatSeries::constant(const Rational& v, std::size_t order) {
  RatSeries s(order);
  s.c_[0] = v;
  return s;
}

namespace {

void check_same_order(const RatSeries& a, const RatSeries& b) {
  if (a.order() != b.order()) fail(errc::invalid_argument, "series order mismatch");
}

}  // namespace

RatSeries& RatSeries::operator+=(const RatSeries& o) {
  check_same_order(*this, o);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
  return *this;
}

RatSeries& RatSeries::operator-=(const RatSeries& o) {
  check_same_order(*this, o);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
  return *this;
}

RatSeries operator*(const RatSeries& a, const RatSeries& b) {
  check_same_order(a, b);
  RatSeries out(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j <= a.order(); ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

RatSeries& RatSeries::scale(const Rational& v) {
  for (auto& cj : c_) cj *= v;
  return *this;
}

RatSeries RatSeries::shifted(std::size_t up) const {
  RatSeries out(order());
  for (std::size_t j = 0; j + up <= order(); ++j) out[j + up] = c_[j];
  return out;
}

RatSeries RatSeries::inverse() const {
  if (c_[0] == 0) fail(errc::invalid_argument, "series has no inverse (zero constant term)");
  RatSeries out(order());
  out[0] = Rational(1) / c_[0];
  for (std::size_t n = 1; n <= order(); ++n) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= n; ++j) acc += c_[j] * out[n - j];
    out[n] = -acc / c_[0];
  }
  return out;
}

RatSeries RatSeries::log() const {
  if (c_[0] != 1) fail(errc::invalid_argument, "log needs unit constant term");
  RatSeries out(order());
  // n a_n = sum_{j=1..n} j L_j a_{n-j}  with a_0 = 1.
  for (std::size_t n = 1; n <= order(); ++n) {
    Rational acc = Rational(n) * c_[n];
    for (std::size_t j = 1; j < n; ++j) acc -= Rational(j) * out[j] * c_[n - j];
    out[n] = acc / Rational(n);
  }
  return out;
}

RatSeries RatSeries::exp() const {
  if (c_[0] != 0) fail(errc::invalid_argument, "exp needs zero constant term");
  RatSeries out(order());
  out[0] = 1;
  for (std::size_t n = 1; n <= order(); ++n) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= n; ++j) acc += Rational(j) * c_[j] * out[n - j];
    out[n] = acc / Rational(n);
  }
  return out;
}

RatSeries RatSeries::pow_int(unsigned e) const {
  RatSeries out = RatSeries::constant(1, order());
  RatSeries base = *this;
  while (e) {
    if (e & 1u) out = out * base;
    base = base * base;
    e >>= 1u;
  }
  return out;
}

RatSeries RatSeries::pow_rational(const Rational& e) const {
  RatSeries l = log();
  l.scale(e);
  return l.exp();
}

}  // namespace mbx
