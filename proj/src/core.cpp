#include "msn/core.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace msn {

namespace {

// Reach sets as fixed-width bit rows sized to n.
struct BitRow {
  std::vector<std::uint64_t> words;

  explicit BitRow(int n) : words((n + 63) / 64, 0) {}
  void set(int id1) { words[(id1 - 1) >> 6] |= 1ull << ((id1 - 1) & 63); }
  void union_with(const BitRow& other) {
    for (std::size_t i = 0; i < words.size(); ++i) words[i] |= other.words[i];
  }
  int count() const {
    int c = 0;
    for (std::uint64_t w : words) c += std::popcount(w);
    return c;
  }
};

}  // namespace

void validate(const Cmsn& net) {
  if (net.n < 0)
    throw ValidationError(ValidationError::Code::out_of_range_id, "negative sensor count");
  std::set<Packet> seen;
  for (const Packet& p : net.events) {
    if (p.u < 1 || p.v > net.n || p.u >= p.v)
      throw ValidationError(ValidationError::Code::out_of_range_id,
                            "packet {" + std::to_string(p.u) + "," + std::to_string(p.v) +
                                "} out of range for n=" + std::to_string(net.n));
    if (!seen.insert(p).second)
      throw ValidationError(ValidationError::Code::duplicate_pair,
                            "pair {" + std::to_string(p.u) + "," + std::to_string(p.v) +
                                "} appears twice");
  }
  if (net.kind == NetworkKind::rcmsn) {
    BigInt want = binomial2(net.n);
    if (BigInt(net.events.size()) != want)
      throw ValidationError(ValidationError::Code::not_exhaustive,
                            "rcmsn must list all " + want.str() + " pairs exactly once");
  }
}

CapacityReport deliveries(const Cmsn& net) {
  validate(net);
  const int n = net.n;
  const auto length = static_cast<long long>(net.events.size());
  if (length == 0 || n < 2)
    throw ValidationError(ValidationError::Code::empty_network,
                          "capacity undefined: no events or fewer than 2 sensors");

  // M[x] = sensors reachable from a packet held by sensor x after the
  // current position; sweep right to left.
  std::vector<BitRow> reach(n + 1, BitRow(n));
  std::vector<bool> touched(n + 1, false);

  CapacityReport report;
  report.deliveries.assign(net.events.size(), 0);
  for (auto k = static_cast<long long>(net.events.size()) - 1; k >= 0; --k) {
    const Packet& p = net.events[static_cast<std::size_t>(k)];
    BitRow delivered(n);
    delivered.set(p.u);
    delivered.set(p.v);
    if (touched[p.u]) delivered.union_with(reach[p.u]);
    if (touched[p.v]) delivered.union_with(reach[p.v]);
    report.deliveries[static_cast<std::size_t>(k)] = delivered.count();
    reach[p.u] = delivered;
    reach[p.v] = delivered;
    touched[p.u] = touched[p.v] = true;
  }

  report.total = 0;
  for (int d : report.deliveries) report.total += d;
  report.capacity = Rational(BigInt(report.total), BigInt(n) * length);
  report.absolute_capacity = Rational(BigInt(report.total), BigInt(n) * binomial2(n));
  return report;
}

Rational capacity(const Cmsn& net) { return deliveries(net).capacity; }

Rational absolute_capacity(const Cmsn& net) { return deliveries(net).absolute_capacity; }

namespace {

constexpr int kUnreached = -1;

// Right-to-left DP: best[x][y] = 1 + min hops to y over chains whose first
// event (after the current position) contains x.
std::vector<std::vector<int>> hops_from(const Cmsn& net, int down_to) {
  const int n = net.n;
  const auto length = static_cast<long long>(net.events.size());
  std::vector<std::vector<int>> best(n + 1, std::vector<int>(n + 1, kUnreached));
  std::vector<std::vector<int>> result(length - down_to);

  std::vector<int> hops(n + 1, kUnreached);
  for (long long k = length - 1; k >= down_to; --k) {
    const Packet& p = net.events[static_cast<std::size_t>(k)];
    for (int y = 1; y <= n; ++y) {
      int via_u = best[p.u][y];
      int via_v = best[p.v][y];
      int h = kUnreached;
      if (via_u != kUnreached) h = via_u;
      if (via_v != kUnreached && (h == kUnreached || via_v < h)) h = via_v;
      hops[y] = h;
    }
    hops[p.u] = 0;
    hops[p.v] = 0;

    std::vector<int> row(n);
    for (int y = 1; y <= n; ++y) row[y - 1] = hops[y];
    result[static_cast<std::size_t>(k - down_to)] = row;

    for (int y = 1; y <= n; ++y) {
      if (hops[y] == kUnreached) continue;
      int stepped = hops[y] + 1;
      if (best[p.u][y] == kUnreached || stepped < best[p.u][y]) best[p.u][y] = stepped;
      if (best[p.v][y] == kUnreached || stepped < best[p.v][y]) best[p.v][y] = stepped;
    }
  }
  return result;
}

}  // namespace

std::optional<int> min_hops(const Cmsn& net, int event_index, int sensor) {
  validate(net);
  if (event_index < 0 || static_cast<std::size_t>(event_index) >= net.events.size() ||
      sensor < 1 || sensor > net.n)
    throw ValidationError(ValidationError::Code::index_out_of_range,
                          "event index or sensor id out of range");
  auto rows = hops_from(net, event_index);
  int h = rows.front()[sensor - 1];
  if (h == kUnreached) return std::nullopt;
  return h;
}

std::vector<std::vector<int>> min_hops_all(const Cmsn& net) {
  validate(net);
  if (net.events.empty()) return {};
  return hops_from(net, 0);
}

}  // namespace msn
