#include "msn/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "msn/core.hpp"
#include "msn/geometry.hpp"
#include "msn/rng.hpp"

namespace msn::montecarlo {

namespace {

void finish(EstimateReport& report) {
  double sum = 0;
  for (double v : report.per_trial) sum += v;
  report.mean = report.per_trial.empty() ? 0.0 : sum / report.per_trial.size();
  double ss = 0;
  for (double v : report.per_trial) ss += (v - report.mean) * (v - report.mean);
  if (report.per_trial.size() > 1) {
    double sd = std::sqrt(ss / (report.per_trial.size() - 1));
    report.stderr_ = sd / std::sqrt(static_cast<double>(report.per_trial.size()));
  }
}

}  // namespace

EstimateReport estimate_gmsn_capacity(int n, long long trials, std::uint64_t seed) {
  EstimateReport report;
  report.n = n;
  report.seed = seed;
  report.trials = trials;
  for (long long t = 0; t < trials; ++t) {
    SplitMix64 gen = substream(seed, "montecarlo.gmsn", static_cast<std::uint64_t>(t));
    Arrangement arr = sample_gmsn(n, gen.next());
    report.per_trial.push_back(to_double(capacity(cmsn_from_arrangement(arr))));
  }
  finish(report);
  return report;
}

EstimateReport estimate_rgmsn_capacity(int n, int s, long long trials, std::uint64_t seed) {
  EstimateReport report;
  report.n = n;
  report.seed = seed;
  report.trials = trials;
  for (long long t = 0; t < trials; ++t) {
    for (std::uint64_t attempt = 0;; ++attempt) {
      SplitMix64 gen = substream(seed, "montecarlo.rgmsn",
                                 static_cast<std::uint64_t>(t) * 1000003 + attempt);
      Arrangement arr = sample_rgmsn(n, s, gen.next());
      Cmsn net = cmsn_from_arrangement(arr);
      if (net.events.empty()) {
        ++report.redraws;
        continue;
      }
      report.per_trial.push_back(to_double(capacity(net)));
      break;
    }
  }
  finish(report);
  return report;
}

EstimateReport estimate_reach_table(int s, int n, long long trials, std::uint64_t seed) {
  if (s != 3 && s != 4) throw Error("reach table supported for s = 3 or 4");
  EstimateReport report;
  report.n = n;
  report.seed = seed;
  report.trials = trials;

  // reached[i][j][k] / possible[i][j][k], classes indexed by slope rank.
  std::vector<std::vector<std::vector<long long>>> reached(
      s, std::vector<std::vector<long long>>(s, std::vector<long long>(s, 0)));
  auto possible = reached;

  for (long long t = 0; t < trials; ++t) {
    Arrangement arr;
    for (std::uint64_t attempt = 0;; ++attempt) {
      SplitMix64 gen = substream(seed, "montecarlo.reach",
                                 static_cast<std::uint64_t>(t) * 1000003 + attempt);
      arr = sample_rgmsn(n, s, gen.next());
      std::map<Rational, int> class_sizes;
      for (const Line& line : arr.lines) ++class_sizes[*line.slope];
      if (static_cast<int>(class_sizes.size()) == s) break;
      ++report.redraws;
    }

    // Rank slopes ascending; rank[line] in 0..s-1.
    std::vector<Rational> slopes;
    for (const Line& line : arr.lines) slopes.push_back(*line.slope);
    std::vector<Rational> distinct = slopes;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<int> rank(arr.lines.size());
    for (std::size_t i = 0; i < arr.lines.size(); ++i)
      rank[i] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), slopes[i]) - distinct.begin());

    Cmsn net = cmsn_from_arrangement(arr);

    // Delivered set per event, by the same right-to-left sweep the capacity
    // engine uses, but keeping the rows.
    const int words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> reach(n + 1,
                                                  std::vector<std::uint64_t>(words, 0));
    std::vector<bool> touched(n + 1, false);
    std::vector<std::vector<std::uint64_t>> delivered(net.events.size());
    for (auto k = static_cast<long long>(net.events.size()) - 1; k >= 0; --k) {
      const Packet& e = net.events[static_cast<std::size_t>(k)];
      std::vector<std::uint64_t> row(words, 0);
      row[(e.u - 1) >> 6] |= 1ull << ((e.u - 1) & 63);
      row[(e.v - 1) >> 6] |= 1ull << ((e.v - 1) & 63);
      if (touched[e.u])
        for (int w = 0; w < words; ++w) row[w] |= reach[e.u][w];
      if (touched[e.v])
        for (int w = 0; w < words; ++w) row[w] |= reach[e.v][w];
      delivered[static_cast<std::size_t>(k)] = row;
      reach[e.u] = row;
      reach[e.v] = row;
      touched[e.u] = touched[e.v] = true;
    }

    for (std::size_t k = 0; k < net.events.size(); ++k) {
      const Packet& e = net.events[k];
      int i = rank[e.u - 1], j = rank[e.v - 1];
      if (i > j) std::swap(i, j);
      for (int target = 1; target <= n; ++target) {
        if (target == e.u || target == e.v) continue;
        int kr = rank[target - 1];
        ++possible[i][j][kr];
        if (delivered[k][(target - 1) >> 6] & (1ull << ((target - 1) & 63)))
          ++reached[i][j][kr];
      }
    }
  }

  double sum = 0;
  int cells = 0;
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j)
      for (int k = 0; k < s; ++k) {
        double p = possible[i][j][k] ? static_cast<double>(reached[i][j][k]) /
                                           static_cast<double>(possible[i][j][k])
                                     : 0.0;
        report.extra.push_back({"P(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    "," + std::to_string(k + 1) + ")",
                                p});
        sum += p;
        ++cells;
      }
  report.per_trial.push_back(cells ? sum / cells : 0.0);  // table mean as the scalar
  finish(report);
  report.trials = trials;
  return report;
}

EstimateReport partition_conjecture_experiment(int n, long long trials, std::uint64_t seed) {
  if (n < 2) throw Error("partition experiment needs n >= 2");
  EstimateReport report;
  report.n = n;
  report.seed = seed;
  report.trials = trials;

  auto group_size = static_cast<long long>(std::ceil(n * std::log(n)));
  if (group_size < 1) group_size = 1;
  std::vector<Packet> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});

  for (long long t = 0; t < trials; ++t) {
    SplitMix64 gen = substream(seed, "montecarlo.conjecture", static_cast<std::uint64_t>(t));
    shuffle(pairs, gen);
    long long groups = 0, complete = 0;
    for (std::size_t start = 0; start < pairs.size();
         start += static_cast<std::size_t>(group_size)) {
      std::size_t stop = std::min(pairs.size(), start + static_cast<std::size_t>(group_size));
      std::vector<bool> seen(n + 1, false);
      int count = 0;
      for (std::size_t idx = start; idx < stop; ++idx)
        for (int x : {pairs[idx].u, pairs[idx].v})
          if (!seen[x]) {
            seen[x] = true;
            ++count;
          }
      ++groups;
      if (count == n) ++complete;
    }
    report.per_trial.push_back(static_cast<double>(complete) / static_cast<double>(groups));
  }
  finish(report);
  report.extra.push_back({"group_size", static_cast<double>(group_size)});
  report.extra.push_back({"reference_1_minus_logn_over_n", 1.0 - std::log(n) / n});
  return report;
}

EstimateReport random_rcmsn_capacity(int n, long long trials, std::uint64_t seed) {
  EstimateReport report;
  report.n = n;
  report.seed = seed;
  report.trials = trials;
  std::vector<Packet> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});
  for (long long t = 0; t < trials; ++t) {
    SplitMix64 gen = substream(seed, "montecarlo.rcmsn", static_cast<std::uint64_t>(t));
    shuffle(pairs, gen);
    Cmsn net{n, NetworkKind::rcmsn, pairs};
    report.per_trial.push_back(to_double(capacity(net)));
  }
  finish(report);
  return report;
}

}  // namespace msn::montecarlo
