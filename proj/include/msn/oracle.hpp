#pragma once

#include <optional>
#include <utility>

#include "msn/core.hpp"
#include "msn/lp.hpp"
#include "msn/wiring.hpp"

namespace msn {

class OracleError : public Error {
 public:
  explicit OracleError(const std::string& what) : Error(what) {}
};

/// Brute-force references. Each is implemented independently of the code
/// path it checks; none shares reachability / LP / search logic with the
/// main library.
namespace oracle {

/// Forward chain propagation per event (S := a_k; scan later events, union
/// when intersecting). Same contract as core deliveries(). n <= 12.
CapacityReport capacity_chain_oracle(const Cmsn& net);

struct Extremes {
  Rational min, max;
  Cmsn argmin, argmax;
};

/// Exact extremes over all orderings of the n-choose-2 pairs. Exhaustive
/// for n <= 4; for n = 5 a seeded sample of `samples` orderings.
Extremes enumerate_rcmsn_extremes(int n, std::uint64_t seed = 1,
                                  long long samples = 20000);

/// Exact binomial-weighted expected absolute 2-slope capacity and its max
/// over the class split m.
std::pair<Rational, Rational> expabs2_exact(int n);

/// Fourier-Motzkin elimination; exact, strictness-aware. <= 8 variables.
bool fm_feasibility(const lp::LinearSystem& sys);

/// Tries all n! initial orders with adjacent-transposition replay. n <= 6.
std::optional<WiringDiagram> wiring_bruteforce(const Cmsn& net);

/// Exhaustive maximization of the three-slope capacity expression over all
/// integer class sizes (a, b, c).
Rational max3_search(long long n);

}  // namespace oracle
}  // namespace msn
