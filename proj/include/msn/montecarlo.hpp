#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "msn/rational.hpp"

namespace msn {
namespace montecarlo {

struct EstimateReport {
  double mean = 0.0;
  double stderr_ = 0.0;  // sample standard deviation / sqrt(trials)
  long long trials = 0;
  int n = 0;
  std::uint64_t seed = 0;
  int redraws = 0;  // degenerate/empty trials replaced (logged, not counted)
  std::vector<std::pair<std::string, double>> extra;
  std::vector<double> per_trial;
};

/// Mean exact capacity of sample_gmsn draws. The limit is 5/6.
EstimateReport estimate_gmsn_capacity(int n, long long trials, std::uint64_t seed);

/// Mean exact capacity of sample_rgmsn draws; trials with an empty event
/// list are redrawn (logged). Limits: s=3 -> 11/18, s=4 -> 17/24.
EstimateReport estimate_rgmsn_capacity(int n, int s, long long trials, std::uint64_t seed);

/// Empirical probability that the crossing of a random class-i and class-j
/// line reaches a random class-k line (classes indexed by slope rank,
/// targets exclude the two crossing lines). extra holds "P(i,j,k)" entries
/// for 1 <= i < j <= s, 1 <= k <= s.
EstimateReport estimate_reach_table(int s, int n, long long trials, std::uint64_t seed);

/// Random partition of all pairs into consecutive groups of ceil(n ln n);
/// mean proportion of groups containing all of 1..n. Exploratory: the
/// report also carries the 1 - ln(n)/n reference value.
EstimateReport partition_conjecture_experiment(int n, long long trials, std::uint64_t seed);

/// Mean capacity of uniformly random orderings of all pairs.
EstimateReport random_rcmsn_capacity(int n, long long trials, std::uint64_t seed);

}  // namespace montecarlo
}  // namespace msn
