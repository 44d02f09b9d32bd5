#pragma once

#include "msn/geometry.hpp"

namespace msn {

class ConstructionError : public Error {
 public:
  enum class Code { bad_params, construction_failed };
  ConstructionError(Code code, const std::string& what) : Error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

namespace constructions {

/// Lines k x + (n+1-k) y = k (n+1-k), k = 1..n; capacity 2(n+1)/(3n). n >= 2.
Arrangement min_capacity_gmsn(int n);

/// n-2 generic body lines (slopes 2..n-1), then a collector (slope 1) and a
/// distributor (slope n), each placed right of every earlier intersection;
/// capacity 1 - 1/n + 2/n^2. n >= 3.
Arrangement max_capacity_gmsn(int n);

/// m slope-(+1) lines and k slope-(-1) lines with intercepts chosen so all
/// intersection x-coordinates are distinct; capacity (n+1)/(2n) with
/// n = m + k. Requires m, k >= 1 and n >= 3 (at n = 2 the lone intersection
/// reaches both lines, so the grid formula does not apply).
Arrangement grid(int m, int k);

/// Best three-slope arrangement: slope classes {1, -1, -3} with sizes
/// chosen by exact maximization of the class-size capacity expression;
/// capacity equals formulas::max3(n). n >= 4.
Arrangement three_slope_optimal(int n);

/// Best four-slope arrangement: slope classes {1, -1, -2, -4}; capacity
/// equals formulas::max4(n). Throws construction_failed if the realized
/// capacity misses the closed form. n >= 5.
Arrangement four_slope_optimal(int n);

/// Collector-distributor family with s slope classes: a = b extreme lines
/// chosen by exact maximization of the delivery bound, s - 2 middle classes
/// of near-equal size; the absolute capacity approaches
/// formulas::maxabs_limit(s) as n grows. n >= s >= 3.
Arrangement collector_distributor_family(int n, int s);

}  // namespace constructions
}  // namespace msn
