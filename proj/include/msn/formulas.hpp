#pragma once

#include <string>
#include <variant>

#include "msn/rational.hpp"

namespace msn {

class FormulaError : public Error {
 public:
  explicit FormulaError(const std::string& what) : Error(what) {}
};

namespace formulas {

/// 2(n+1)/(3n), the least capacity any rcmsn can have. n >= 2.
Rational min_rcmsn(long long n);

/// 1 - 1/n + 2/n^2, the greatest. n >= 2.
Rational max_rcmsn(long long n);

/// Capacity of every 2-slope network with both classes nonempty: (n+1)/(2n).
Rational cap2(long long n);

/// Max absolute capacity over 2-slope networks: (n+2)/(4n-4) for even n,
/// (n+1)(n+2)/(4n^2) for odd n (max over the class split m).
Rational maxabs2(long long n);

/// Expected absolute capacity with uniform class assignment: (n+2)/(4n).
Rational expabs2(long long n);

/// Exact max capacity with at most three slopes; max of the two displayed
/// candidate fractions over p in {q, q+1}, q = floor(sqrt(n)/2). n >= 4.
Rational max3(long long n);

/// Exact max capacity with at most four slopes. n >= 5.
Rational max4(long long n);

/// The 3-slope capacity of the best arrangement with class sizes
/// (a, b, c): (2b+a+c+2)/(2n) - ((n-1)/(2n)) * b/(ab+bc+ca).
Rational three_slope_capacity(long long a, long long b, long long c);

/// The 4-slope best-arrangement capacity with class sizes (a, b, c, d).
Rational four_slope_capacity(long long a, long long b, long long c, long long d);

/// Limit (n -> infinity) of the max absolute capacity with s >= 3 slopes;
/// contains a 3/2-power, so returned at high precision.
HighPrecisionReal maxabs_limit(long long s);

/// Limits of expected capacity: s = 0 -> 5/6 (all slopes distinct),
/// s = 3 -> 11/18, s = 4 -> 17/24.
Rational exp_limit(int s);

/// Leading terms of the max capacity with s slopes: for s >= 4 the rational
/// 1 - (s-2)/((s-3) n); for s = 3 the real 1 - n^(-1/2) + (9/8) n^(-1).
HighPrecisionReal max_s_leading(long long n, long long s);

}  // namespace formulas

/// Name-based dispatcher used by the CLI: one of min_rcmsn, max_rcmsn, cap2,
/// maxabs2, expabs2, max3, max4, maxabs_limit, exp_limit, max_s_leading.
std::variant<Rational, HighPrecisionReal> closed_form(const std::string& name,
                                                      long long n, long long s);

}  // namespace msn
