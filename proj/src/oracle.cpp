#include "msn/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "msn/formulas.hpp"
#include "msn/rng.hpp"

namespace msn::oracle {

CapacityReport capacity_chain_oracle(const Cmsn& net) {
  validate(net);
  if (net.n > 12) throw OracleError("chain oracle limited to n <= 12");
  if (net.events.empty() || net.n < 2)
    throw ValidationError(ValidationError::Code::empty_network,
                          "capacity undefined: no events or fewer than 2 sensors");

  const auto length = static_cast<long long>(net.events.size());
  CapacityReport report;
  report.deliveries.assign(net.events.size(), 0);
  for (long long k = 0; k < length; ++k) {
    std::vector<char> reached(net.n + 1, 0);
    reached[net.events[static_cast<std::size_t>(k)].u] = 1;
    reached[net.events[static_cast<std::size_t>(k)].v] = 1;
    for (long long j = k + 1; j < length; ++j) {
      const Packet& e = net.events[static_cast<std::size_t>(j)];
      if (reached[e.u] || reached[e.v]) reached[e.u] = reached[e.v] = 1;
    }
    int count = 0;
    for (int x = 1; x <= net.n; ++x) count += reached[x];
    report.deliveries[static_cast<std::size_t>(k)] = count;
  }
  report.total = std::accumulate(report.deliveries.begin(), report.deliveries.end(), 0ll);
  report.capacity = Rational(BigInt(report.total), BigInt(net.n) * length);
  report.absolute_capacity =
      Rational(BigInt(report.total), BigInt(net.n) * binomial2(net.n));
  return report;
}

Extremes enumerate_rcmsn_extremes(int n, std::uint64_t seed, long long samples) {
  if (n < 2 || n > 5) throw OracleError("extremes enumeration limited to 2 <= n <= 5");
  std::vector<Packet> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.push_back({i, j});

  Extremes ext;
  bool first = true;
  auto consider = [&](const std::vector<Packet>& order) {
    Cmsn net{n, NetworkKind::rcmsn, order};
    Rational value = capacity_chain_oracle(net).capacity;
    if (first || value < ext.min) {
      ext.min = value;
      ext.argmin = net;
    }
    if (first || value > ext.max) {
      ext.max = value;
      ext.argmax = net;
    }
    first = false;
  };

  if (n <= 4) {
    std::sort(pairs.begin(), pairs.end());
    do consider(pairs);
    while (std::next_permutation(pairs.begin(), pairs.end()));
  } else {
    SplitMix64 gen = substream(seed, "oracle.extremes", 0);
    for (long long t = 0; t < samples; ++t) {
      shuffle(pairs, gen);
      consider(pairs);
    }
  }
  return ext;
}

std::pair<Rational, Rational> expabs2_exact(int n) {
  if (n < 3) throw OracleError("expabs2_exact needs n >= 3");
  BigInt den = BigInt(n) * n * (n - 1);
  Rational expected(0);
  Rational best(0);
  BigInt binom = 1;  // C(n, 0)
  for (int m = 0; m <= n; ++m) {
    Rational absolute(BigInt(m) * (n - m) * (n + 2), den);
    expected += Rational(binom, BigInt(1) << n) * absolute;
    best = std::max(best, absolute);
    binom = binom * (n - m) / (m + 1);
  }
  return {expected, best};
}

namespace {

struct FmRow {
  std::vector<Rational> coeffs;  // over remaining variables
  Rational rhs;
  bool strict = false;  // coeffs.x > rhs vs >= rhs
};

}  // namespace

bool fm_feasibility(const lp::LinearSystem& sys) {
  if (sys.num_vars > 8) throw OracleError("Fourier-Motzkin oracle limited to 8 variables");

  // Equalities become a pair of opposite inequalities; elimination handles
  // the rest. Rows are normalized to spot duplicates early.
  std::vector<FmRow> rows;
  for (const auto& c : sys.constraints) {
    FmRow row{c.coeffs, c.rhs, c.rel == lp::Relation::greater};
    rows.push_back(row);
    if (c.rel == lp::Relation::equal) {
      FmRow flip = row;
      for (auto& v : flip.coeffs) v = -v;
      flip.rhs = -flip.rhs;
      rows.push_back(flip);
    }
  }

  auto normalize = [](FmRow& r) {
    Rational scale(0);
    for (const Rational& v : r.coeffs)
      if (v != 0) {
        scale = abs(v);
        break;
      }
    if (scale == 0) return;
    for (auto& v : r.coeffs) v /= scale;
    r.rhs /= scale;
  };

  for (int var = 0; var < sys.num_vars; ++var) {
    std::vector<FmRow> lower, upper, rest;
    for (FmRow& r : rows) {
      const Rational& a = r.coeffs[var];
      if (a > 0)
        lower.push_back(r);  // x >= (rhs - rest)/a
      else if (a < 0)
        upper.push_back(r);
      else
        rest.push_back(r);
    }
    std::vector<FmRow> next = std::move(rest);
    for (const FmRow& lo : lower)
      for (const FmRow& up : upper) {
        // a_lo x + L >= rhs_lo (a_lo > 0), a_up x + U >= rhs_up (a_up < 0)
        Rational w_lo = -up.coeffs[var];  // > 0
        Rational w_up = lo.coeffs[var];   // > 0
        FmRow merged;
        merged.coeffs.resize(lo.coeffs.size());
        for (std::size_t j = 0; j < lo.coeffs.size(); ++j)
          merged.coeffs[j] = w_lo * lo.coeffs[j] + w_up * up.coeffs[j];
        merged.rhs = w_lo * lo.rhs + w_up * up.rhs;
        merged.strict = lo.strict || up.strict;
        merged.coeffs[var] = 0;
        normalize(merged);
        next.push_back(std::move(merged));
        if (next.size() > 200000) throw OracleError("Fourier-Motzkin blow-up");
      }
    // Deduplicate identical rows, keeping the stricter flag.
    std::sort(next.begin(), next.end(), [](const FmRow& a, const FmRow& b) {
      if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
      if (a.rhs != b.rhs) return a.rhs < b.rhs;
      return a.strict < b.strict;
    });
    std::vector<FmRow> dedup;
    for (FmRow& r : next) {
      if (!dedup.empty() && dedup.back().coeffs == r.coeffs && dedup.back().rhs == r.rhs)
        dedup.back().strict = dedup.back().strict || r.strict;
      else
        dedup.push_back(std::move(r));
    }
    rows = std::move(dedup);
  }

  for (const FmRow& r : rows) {
    // All-zero support: 0 REL rhs must hold.
    if (r.strict ? !(Rational(0) > r.rhs) : !(Rational(0) >= r.rhs)) return false;
  }
  return true;
}

std::optional<WiringDiagram> wiring_bruteforce(const Cmsn& net) {
  validate(net);
  if (net.n > 6) throw OracleError("wiring brute force limited to n <= 6");
  std::vector<int> sigma(net.n);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::optional<WiringDiagram> best;
  do {
    auto replay = replay_with_order(net, sigma);
    if (replay && (!best || replay->sigma < best->sigma)) best = replay;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

Rational max3_search(long long n) {
  if (n < 4) throw OracleError("max3_search needs n >= 4");
  Rational best(-1);
  for (long long a = 1; a <= n - 2; ++a)
    for (long long c = a; a + c <= n - 1; ++c)
      best = std::max(best, formulas::three_slope_capacity(a, n - a - c, c));
  return best;
}

}  // namespace msn::oracle
