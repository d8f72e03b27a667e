#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace mbx {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

// 50-digit working types for root finding and orbit filtering.
using HighFloat = boost::multiprecision::cpp_bin_float_50;
using HighComplex = boost::multiprecision::cpp_complex_50;

BigInt big_pow(BigInt base, unsigned exp);

double to_double(const Rational& r);

// Exact "p/q" in base 10 ("p" when q == 1 is still printed as "p/1").
std::string rational_str(const Rational& r);

// Lenient fraction parser: "p/q", "p", optional sign and surrounding blanks.
Rational parse_rational(std::string_view s);

}  // namespace mbx
