#include "msn/formulas.hpp"

#include <algorithm>

namespace msn {
namespace formulas {

namespace {

Rational ratio(const BigInt& num, const BigInt& den) { return Rational(num, den); }

void require(bool ok, const char* what) {
  if (!ok) throw FormulaError(what);
}

}  // namespace

Rational min_rcmsn(long long n) {
  require(n >= 2, "min_rcmsn needs n >= 2");
  return ratio(2 * BigInt(n + 1), 3 * BigInt(n));
}

Rational max_rcmsn(long long n) {
  require(n >= 2, "max_rcmsn needs n >= 2");
  BigInt nn(n);
  return ratio(nn * nn - nn + 2, nn * nn);
}

Rational cap2(long long n) {
  require(n >= 3, "cap2 needs n >= 3");
  return ratio(BigInt(n + 1), 2 * BigInt(n));
}

Rational maxabs2(long long n) {
  require(n >= 3, "maxabs2 needs n >= 3");
  BigInt nn(n);
  if (n % 2 == 0) return ratio(nn + 2, 4 * nn - 4);
  return ratio((nn + 1) * (nn + 2), 4 * nn * nn);
}

Rational expabs2(long long n) {
  require(n >= 3, "expabs2 needs n >= 3");
  return ratio(BigInt(n + 2), 4 * BigInt(n));
}

namespace {

// The two displayed candidate fractions for the 3-slope maximum.
Rational max3_symmetric(const BigInt& n, const BigInt& p) {
  BigInt num = (4 * p - 1) * n * n - (10 * p * p - 6 * p - 1) * n +
               (6 * p * p * p - 6 * p * p - 2 * p);
  BigInt den = 4 * p * n * n - 6 * p * p * n;
  return Rational(num, den);
}

Rational max3_offset(const BigInt& n, const BigInt& q) {
  BigInt num = (4 * q + 1) * n * n - (10 * q * q + 4 * q - 1) * n +
               (6 * q * q * q + 3 * q * q - 3 * q - 2);
  BigInt den = (4 * q + 2) * n * n - (6 * q * q + 6 * q + 2) * n;
  return Rational(num, den);
}

}  // namespace

Rational max3(long long n) {
  require(n >= 4, "max3 needs n >= 4");
  BigInt nn(n);
  BigInt q = boost::multiprecision::sqrt(nn) / 2;  // floor(sqrt(n)/2)
  // The statement leaves "p = q or p = q+1" open; evaluate all candidates.
  Rational best = max3_symmetric(nn, q);
  best = std::max(best, max3_symmetric(nn, q + 1));
  best = std::max(best, max3_offset(nn, q));
  return best;
}

Rational three_slope_capacity(long long a, long long b, long long c) {
  require(a >= 1 && b >= 1 && c >= 1, "three_slope_capacity needs positive class sizes");
  BigInt A(a), B(b), C(c);
  BigInt n = A + B + C;
  BigInt pairs = A * B + B * C + C * A;
  return ratio(2 * B + A + C + 2, 2 * n) - ratio((n - 1) * B, 2 * n * pairs);
}

Rational four_slope_capacity(long long a, long long b, long long c, long long d) {
  require(a >= 1 && b >= 1 && c >= 1 && d >= 1,
          "four_slope_capacity needs positive class sizes");
  BigInt A(a), B(b), C(c), D(d);
  BigInt n = A + B + C + D;
  BigInt pairs = A * D + B * C + (A + D) * (B + C);
  Rational first = ratio(A + D + 2 * (B + C) + 1, 2 * n);
  Rational second =
      ratio(A * D + B * C * (A + D - 1) + (B + C) - (B + C) * (B + C), 2 * n * pairs);
  return first + second;
}

Rational max4(long long n) {
  require(n >= 5, "max4 needs n >= 5");
  // Maximum of the best-arrangement expression over the candidate class
  // splits d = 1, a in {1, 2}, |b - c| <= 1. Note the closed forms below
  // equal these candidates with the parity branches the reverse of the
  // published display (the displayed parity labels are swapped; the
  // displayed values are not capacities of any n-sensor network).
  BigInt nn(n);
  Rational display = (n % 2 == 0)
                         ? ratio(nn * nn * nn + 2 * nn * nn - 2 * nn - 4,
                                 nn * (nn * nn + 4 * nn - 8))
                         : ratio(nn * nn * nn + 2 * nn * nn - 3 * nn - 4,
                                 nn * (nn * nn + 4 * nn - 9));
  return display;
}

HighPrecisionReal maxabs_limit(long long s) {
  require(s >= 3, "maxabs_limit needs s >= 3");
  BigInt S(s);
  BigInt poly = 135 * S * S * S - 945 * S * S + 2232 * S - 1796;
  BigInt radicand = 9 * S * S - 42 * S + 52;
  BigInt den = 243 * (S - 2) * (S - 2) * (S - 2);
  HighPrecisionReal root = sqrt(HighPrecisionReal(radicand));
  return (HighPrecisionReal(poly) + 4 * root * root * root) / HighPrecisionReal(den);
}

Rational exp_limit(int s) {
  switch (s) {
    case 0:
      return Rational(5, 6);
    case 3:
      return Rational(11, 18);
    case 4:
      return Rational(17, 24);
    default:
      throw FormulaError("exp_limit known only for s = 0 (unrestricted), 3, 4");
  }
}

HighPrecisionReal max_s_leading(long long n, long long s) {
  require(n >= 1 && s >= 3, "max_s_leading needs n >= 1 and s >= 3");
  if (s == 3) {
    HighPrecisionReal nn(n);
    return 1 - 1 / sqrt(nn) + HighPrecisionReal(9) / (8 * nn);
  }
  return to_real(Rational(1) - Rational(BigInt(s - 2), BigInt(s - 3) * n));
}

}  // namespace formulas

std::variant<Rational, HighPrecisionReal> closed_form(const std::string& name,
                                                      long long n, long long s) {
  std::string key = name;
  std::replace(key.begin(), key.end(), '-', '_');
  using formulas::exp_limit;
  if (key == "min_rcmsn") return formulas::min_rcmsn(n);
  if (key == "max_rcmsn") return formulas::max_rcmsn(n);
  if (key == "cap2") return formulas::cap2(n);
  if (key == "maxabs2") return formulas::maxabs2(n);
  if (key == "expabs2") return formulas::expabs2(n);
  if (key == "max3") return formulas::max3(n);
  if (key == "max4") return formulas::max4(n);
  if (key == "maxabs_limit") return formulas::maxabs_limit(s);
  if (key == "exp_limit") return exp_limit(static_cast<int>(s));
  if (key == "max_s_leading") return formulas::max_s_leading(n, s);
  throw FormulaError("unknown formula name: " + name);
}

}  // namespace msn
