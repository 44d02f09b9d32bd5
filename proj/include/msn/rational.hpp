#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace msn {

using BigInt = boost::multiprecision::cpp_int;

/// All exact quantities (capacities, slopes, intercepts, LP coefficients) are
/// canonical-form rationals: gcd(num, den) = 1, den > 0.
using Rational = boost::multiprecision::cpp_rational;

/// 64 decimal digits; used only where a value contains a radical
/// (asymptotic expressions, the s-slope absolute-capacity limit).
using HighPrecisionReal =
    boost::multiprecision::number<boost::multiprecision::cpp_bin_float<64>>;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Parses "p/q" or "p". Throws Error on malformed input or q == 0.
Rational rational_from_string(const std::string& text);

/// Canonical text form: "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Exact decimal rendering with `places` digits after the point,
/// round-half-even on the last digit.
std::string to_decimal_string(const Rational& r, int places);

double to_double(const Rational& r);
HighPrecisionReal to_real(const Rational& r);

inline BigInt binomial2(long long n) { return BigInt(n) * (n - 1) / 2; }

}  // namespace msn
