#pragma once

#include <optional>
#include <vector>

#include "msn/rational.hpp"

namespace msn {

class LpError : public Error {
 public:
  enum class Code { malformed_system };
  LpError(Code code, const std::string& what) : Error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

namespace lp {

enum class Relation { greater, greater_equal, equal };  // coeffs . x  REL  rhs

struct Constraint {
  std::vector<Rational> coeffs;
  Relation rel = Relation::greater_equal;
  Rational rhs;
};

struct LinearSystem {
  int num_vars = 0;
  std::vector<Constraint> constraints;

  bool homogeneous() const;
  void add(std::vector<Rational> coeffs, Relation rel, Rational rhs = Rational(0));
};

/// A point that satisfies every constraint exactly; checked on construction
/// by the solver before being returned.
struct Witness {
  std::vector<Rational> values;
};

bool satisfies(const LinearSystem& sys, const std::vector<Rational>& x);

/// Strict feasibility of a homogeneous system: every c.x > 0 is replaced by
/// c.x >= 1 (valid by positive scaling) and an exact rational simplex with
/// Bland's rule runs on the result. Returns nullopt when infeasible.
/// Throws malformed_system when the system is not homogeneous.
std::optional<Witness> feasible_strict(const LinearSystem& sys);

/// Feasibility of a (possibly inhomogeneous) system of >= / = constraints.
/// Relation::greater here is an error (no scaling argument applies).
std::optional<Witness> feasible(const LinearSystem& sys);

struct LfpResult {
  enum class Status { optimal, unbounded, infeasible };
  Status status = Status::infeasible;
  Rational value;
  std::optional<Witness> argmax;  // in original coordinates when attained
};

/// max (numer . x) / (denom . x) subject to sys, via the Charnes-Cooper
/// substitution. The caller guarantees denom . x > 0 on the feasible
/// region; strict constraints are treated as their closures.
LfpResult maximize_linear_fractional(const std::vector<Rational>& numer,
                                     const std::vector<Rational>& denom,
                                     const LinearSystem& sys);

}  // namespace lp
}  // namespace msn
