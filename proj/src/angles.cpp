#include "multibrot/angles.hpp"

#include "multibrot/error.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <cctype>

namespace mbx {

BigInt big_pow(BigInt base, unsigned exp) {
  BigInt out = 1;
  while (exp) {
    if (exp & 1u) out *= base;
    base *= base;
    exp >>= 1u;
  }
  return out;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string rational_str(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view s) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
    return v;
  };
  s = trim(s);
  if (s.empty()) fail(errc::invalid_argument, "empty fraction");
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)), 1);
    BigInt num{std::string(trim(s.substr(0, slash)))};
    BigInt den{std::string(trim(s.substr(slash + 1)))};
    if (den == 0) fail(errc::invalid_argument, "zero denominator in '" + std::string(s) + "'");
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(errc::invalid_argument, "cannot parse fraction '" + std::string(s) + "'");
  }
}

namespace {

void check_degree(int d) {
  if (d < 2) fail(errc::invalid_argument, "degree must be at least 2");
}

}  // namespace

Angle::Angle(BigInt num, BigInt den) {
  if (den == 0) fail(errc::invalid_argument, "zero denominator");
  if (den < 0) {
    den = -den;
    num = -num;
  }
  num %= den;
  if (num < 0) num += den;
  BigInt g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Angle::Angle(const Rational& r) : Angle(numerator(r), denominator(r)) {}

Angle Angle::parse(std::string_view s) { return Angle(parse_rational(s)); }

double Angle::value() const { return Rational(num_, den_).convert_to<double>(); }

std::string Angle::str() const { return num_.str() + "/" + den_.str(); }

Angle tau(int d, const Angle& a) {
  check_degree(d);
  return Angle(a.num() * d, a.den());
}

OrbitInfo orbit_info(int d, const Angle& a) {
  check_degree(d);
  // Preperiod: peel the part of the denominator sharing factors with d.
  OrbitInfo info;
  BigInt q = a.den();
  BigInt g = gcd(q, BigInt(d));
  while (g > 1) {
    q /= g;
    ++info.preperiod;
    g = gcd(q, BigInt(d));
  }
  if (q == 1) {
    info.period = 1;  // tail is the fixed angle 0
    return info;
  }
  // Period = multiplicative order of d mod q (independent of the numerator,
  // which is coprime to q).
  BigInt t = BigInt(d) % q;
  std::uint64_t n = 1;
  constexpr std::uint64_t kOrderCap = 20'000'000;
  while (t != 1) {
    t = (t * d) % q;
    if (++n > kOrderCap) fail(errc::budget_exceeded, "period search exceeded iteration cap");
  }
  info.period = n;
  return info;
}

std::vector<int> base_d_digits(int d, const Angle& a, std::size_t len) {
  check_degree(d);
  std::vector<int> digits;
  digits.reserve(len);
  BigInt p = a.num();
  const BigInt& q = a.den();
  for (std::size_t k = 0; k < len; ++k) {
    BigInt scaled = p * d;
    digits.push_back(static_cast<int>(scaled / q));
    p = scaled % q;
  }
  return digits;
}

Angle angle_from_digits(int d, const std::vector<int>& preperiodic, const std::vector<int>& periodic) {
  check_degree(d);
  for (int dig : preperiodic)
    if (dig < 0 || dig >= d) fail(errc::invalid_argument, "digit out of range");
  for (int dig : periodic)
    if (dig < 0 || dig >= d) fail(errc::invalid_argument, "digit out of range");
  BigInt head = 0;
  for (int dig : preperiodic) head = head * d + dig;
  const BigInt pre_den = big_pow(d, static_cast<unsigned>(preperiodic.size()));
  Rational value(head, pre_den);
  if (!periodic.empty()) {
    BigInt rep = 0;
    for (int dig : periodic) rep = rep * d + dig;
    const BigInt per_den = big_pow(d, static_cast<unsigned>(periodic.size())) - 1;
    if (per_den == 0) fail(errc::invalid_argument, "empty periodic block");
    value += Rational(rep, per_den * pre_den);
  }
  return Angle(value);
}

}  // namespace mbx
