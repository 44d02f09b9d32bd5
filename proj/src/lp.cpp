#include "msn/lp.hpp"

#include <algorithm>
#include <cstddef>

namespace msn::lp {

bool LinearSystem::homogeneous() const {
  return std::all_of(constraints.begin(), constraints.end(),
                     [](const Constraint& c) { return c.rhs == 0; });
}

void LinearSystem::add(std::vector<Rational> coeffs, Relation rel, Rational rhs) {
  constraints.push_back({std::move(coeffs), rel, std::move(rhs)});
}

bool satisfies(const LinearSystem& sys, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != sys.num_vars) return false;
  for (const Constraint& c : sys.constraints) {
    Rational lhs = 0;
    for (int j = 0; j < sys.num_vars; ++j) lhs += c.coeffs[j] * x[j];
    switch (c.rel) {
      case Relation::greater:
        if (!(lhs > c.rhs)) return false;
        break;
      case Relation::greater_equal:
        if (!(lhs >= c.rhs)) return false;
        break;
      case Relation::equal:
        if (lhs != c.rhs) return false;
        break;
    }
  }
  return true;
}

namespace {

// Dense two-phase simplex on  min cost.x  s.t.  A x = b, x >= 0,
// exact rationals, Bland's rule throughout.
class Simplex {
 public:
  Simplex(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs)
      : rows_(std::move(rows)), rhs_(std::move(rhs)) {
    m_ = rows_.size();
    n_ = m_ ? rows_[0].size() : 0;
    for (std::size_t i = 0; i < m_; ++i)
      if (rhs_[i] < 0) {
        for (auto& a : rows_[i]) a = -a;
        rhs_[i] = -rhs_[i];
      }
  }

  enum class Status { optimal, infeasible, unbounded };

  // Phase 1; returns false when infeasible.
  bool find_feasible_basis() {
    std::size_t art0 = n_;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t k = 0; k < m_; ++k) rows_[i].push_back(i == k ? 1 : 0);
    }
    n_ += m_;
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) basis_[i] = art0 + i;

    std::vector<Rational> cost(n_, Rational(0));
    for (std::size_t j = art0; j < n_; ++j) cost[j] = 1;
    Status st = run(cost);
    if (st != Status::optimal || objective_ != 0) return false;

    // Pivot surviving artificials out; a row with no real pivot is redundant.
    for (std::size_t i = 0; i < m_;) {
      if (basis_[i] < art0) {
        ++i;
        continue;
      }
      std::size_t enter = art0;
      for (std::size_t j = 0; j < art0; ++j)
        if (rows_[i][j] != 0) {
          enter = j;
          break;
        }
      if (enter < art0) {
        pivot(i, enter);
        ++i;
      } else {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        --m_;
      }
    }
    // Drop artificial columns.
    for (std::size_t i = 0; i < m_; ++i) rows_[i].resize(art0);
    n_ = art0;
    return true;
  }

  Status optimize(const std::vector<Rational>& cost) {
    std::vector<Rational> padded = cost;
    padded.resize(n_, Rational(0));
    return run(padded);
  }

  std::vector<Rational> solution(std::size_t take) const {
    std::vector<Rational> x(take, Rational(0));
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < take) x[basis_[i]] = rhs_[i];
    return x;
  }

  const Rational& objective() const { return objective_; }

 private:
  Status run(const std::vector<Rational>& cost) {
    // Reduced-cost row for the current basis.
    zrow_.assign(n_, Rational(0));
    objective_ = 0;
    for (std::size_t j = 0; j < n_; ++j) zrow_[j] = cost[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) zrow_[j] -= cb * rows_[i][j];
      objective_ += cb * rhs_[i];
    }

    while (true) {
      std::size_t enter = n_;
      for (std::size_t j = 0; j < n_; ++j)
        if (zrow_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == n_) return Status::optimal;

      std::size_t leave = m_;
      for (std::size_t i = 0; i < m_; ++i) {
        if (rows_[i][enter] <= 0) continue;
        if (leave == m_) {
          leave = i;
          continue;
        }
        Rational cur = rhs_[i] / rows_[i][enter];
        Rational best = rhs_[leave] / rows_[leave][enter];
        if (cur < best || (cur == best && basis_[i] < basis_[leave])) leave = i;
      }
      if (leave == m_) return Status::unbounded;
      objective_ += zrow_[enter] * (rhs_[leave] / rows_[leave][enter]);
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    Rational inv = 1 / rows_[row][col];
    for (auto& a : rows_[row]) a *= inv;
    rhs_[row] *= inv;
    rows_[row][col] = 1;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || rows_[i][col] == 0) continue;
      Rational f = rows_[i][col];
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] -= f * rows_[row][j];
      rows_[i][col] = 0;
      rhs_[i] -= f * rhs_[row];
    }
    if (!zrow_.empty() && zrow_[col] != 0) {
      Rational f = zrow_[col];
      for (std::size_t j = 0; j < n_; ++j) zrow_[j] -= f * rows_[row][j];
      zrow_[col] = 0;
    }
    basis_[row] = col;
  }

  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<Rational> zrow_;
  std::vector<std::size_t> basis_;
  Rational objective_;
  std::size_t m_ = 0, n_ = 0;
};

// Columns: x = xp - xm (free split), then one surplus slack per inequality.
struct Encoded {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  std::size_t ncols = 0;
};

Encoded encode(const LinearSystem& sys, bool strict_to_one) {
  std::size_t nv = static_cast<std::size_t>(sys.num_vars);
  std::size_t slacks = 0;
  for (const Constraint& c : sys.constraints)
    if (c.rel != Relation::equal) ++slacks;

  Encoded out;
  out.ncols = 2 * nv + slacks;
  std::size_t slack_at = 2 * nv;
  for (const Constraint& c : sys.constraints) {
    if (static_cast<std::size_t>(sys.num_vars) != c.coeffs.size())
      throw LpError(LpError::Code::malformed_system, "coefficient vector has wrong length");
    std::vector<Rational> row(out.ncols, Rational(0));
    for (std::size_t j = 0; j < nv; ++j) {
      row[2 * j] = c.coeffs[j];
      row[2 * j + 1] = -c.coeffs[j];
    }
    Rational rhs = c.rhs;
    if (c.rel == Relation::greater) {
      if (!strict_to_one)
        throw LpError(LpError::Code::malformed_system,
                      "strict constraint in a context that cannot scale it");
      rhs += 1;  // c.x > 0  ->  c.x >= 1 (homogeneous scaling)
    }
    if (c.rel != Relation::equal) row[slack_at++] = -1;
    out.rows.push_back(std::move(row));
    out.rhs.push_back(std::move(rhs));
  }
  return out;
}

std::optional<Witness> solve_feasibility(const LinearSystem& sys, bool strict_to_one) {
  Encoded enc = encode(sys, strict_to_one);
  Simplex simplex(std::move(enc.rows), std::move(enc.rhs));
  if (!simplex.find_feasible_basis()) return std::nullopt;
  std::vector<Rational> cols = simplex.solution(2 * static_cast<std::size_t>(sys.num_vars));
  Witness w;
  w.values.resize(sys.num_vars);
  for (int j = 0; j < sys.num_vars; ++j) w.values[j] = cols[2 * j] - cols[2 * j + 1];
  return w;
}

}  // namespace

std::optional<Witness> feasible_strict(const LinearSystem& sys) {
  if (!sys.homogeneous())
    throw LpError(LpError::Code::malformed_system,
                  "feasible_strict requires a homogeneous system");
  auto witness = solve_feasibility(sys, true);
  if (!witness) return std::nullopt;
  if (!satisfies(sys, witness->values))
    throw LpError(LpError::Code::malformed_system,
                  "internal error: witness fails exact substitution");
  return witness;
}

std::optional<Witness> feasible(const LinearSystem& sys) {
  for (const Constraint& c : sys.constraints)
    if (c.rel == Relation::greater)
      throw LpError(LpError::Code::malformed_system,
                    "feasible() accepts only >= and = constraints");
  auto witness = solve_feasibility(sys, false);
  if (witness && !satisfies(sys, witness->values))
    throw LpError(LpError::Code::malformed_system,
                  "internal error: witness fails exact substitution");
  return witness;
}

LfpResult maximize_linear_fractional(const std::vector<Rational>& numer,
                                     const std::vector<Rational>& denom,
                                     const LinearSystem& sys) {
  if (static_cast<int>(numer.size()) != sys.num_vars ||
      static_cast<int>(denom.size()) != sys.num_vars)
    throw LpError(LpError::Code::malformed_system, "objective vector has wrong length");

  // Charnes-Cooper: y = x / (denom.x), t = 1 / (denom.x);
  // max numer.y  s.t.  coeffs.y - rhs * t >= 0, denom.y = 1, t >= 0.
  const std::size_t nv = static_cast<std::size_t>(sys.num_vars);
  LinearSystem cc;
  cc.num_vars = sys.num_vars + 1;
  for (const Constraint& c : sys.constraints) {
    std::vector<Rational> row(nv + 1, Rational(0));
    for (std::size_t j = 0; j < nv; ++j) row[j] = c.coeffs[j];
    row[nv] = -c.rhs;
    cc.add(std::move(row), c.rel == Relation::equal ? Relation::equal
                                                    : Relation::greater_equal);
  }
  {
    std::vector<Rational> row(nv + 1, Rational(0));
    for (std::size_t j = 0; j < nv; ++j) row[j] = denom[j];
    cc.add(std::move(row), Relation::equal, Rational(1));
  }
  {
    std::vector<Rational> row(nv + 1, Rational(0));
    row[nv] = 1;
    cc.add(std::move(row), Relation::greater_equal);
  }

  Encoded enc = encode(cc, false);
  Simplex simplex(std::move(enc.rows), std::move(enc.rhs));
  LfpResult result;
  if (!simplex.find_feasible_basis()) {
    result.status = LfpResult::Status::infeasible;
    return result;
  }
  std::vector<Rational> cost(enc.ncols, Rational(0));
  for (std::size_t j = 0; j < nv; ++j) {
    cost[2 * j] = -numer[j];  // maximize
    cost[2 * j + 1] = numer[j];
  }
  Simplex::Status st = simplex.optimize(cost);
  if (st == Simplex::Status::unbounded) {
    result.status = LfpResult::Status::unbounded;
    return result;
  }
  std::vector<Rational> cols = simplex.solution(2 * (nv + 1));
  std::vector<Rational> y(nv + 1);
  for (std::size_t j = 0; j <= nv; ++j) y[j] = cols[2 * j] - cols[2 * j + 1];
  result.status = LfpResult::Status::optimal;
  result.value = -simplex.objective();
  if (y[nv] > 0) {
    Witness w;
    w.values.resize(nv);
    for (std::size_t j = 0; j < nv; ++j) w.values[j] = y[j] / y[nv];
    result.argmax = std::move(w);
  }
  return result;
}

}  // namespace msn::lp
