#pragma once

#include <optional>
#include <vector>

#include "msn/rational.hpp"

namespace msn {

/// Unordered sensor pair, stored with u < v. Ids are 1-based.
struct Packet {
  int u = 0;
  int v = 0;

  friend bool operator==(const Packet&, const Packet&) = default;
  friend auto operator<=>(const Packet&, const Packet&) = default;
};

inline Packet packet(int a, int b) { return a < b ? Packet{a, b} : Packet{b, a}; }

enum class NetworkKind { rcmsn, cmsn };

/// Ordered sequence of communication events. For an rcmsn the events are
/// exactly the n-choose-2 distinct pairs, each once; a cmsn may omit pairs
/// (parallel sensors) but never repeats one.
struct Cmsn {
  int n = 0;
  NetworkKind kind = NetworkKind::cmsn;
  std::vector<Packet> events;

  friend bool operator==(const Cmsn&, const Cmsn&) = default;
};

class ValidationError : public Error {
 public:
  enum class Code {
    duplicate_pair,
    out_of_range_id,
    not_exhaustive,
    empty_network,
    index_out_of_range,
  };

  ValidationError(Code code, const std::string& what) : Error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

/// Confirms the Cmsn invariants; normalizes nothing.
void validate(const Cmsn& net);

struct CapacityReport {
  std::vector<int> deliveries;  // per event, count of sensors reached
  long long total = 0;
  Rational capacity;           // total / (n * L)
  Rational absolute_capacity;  // total / (n * C(n,2))
};

/// Per-event delivery counts via the right-to-left sweep over per-sensor
/// reach sets (bit sets sized to n). O(L * n) word operations.
/// Throws ValidationError (empty_network when L = 0 or n < 2).
CapacityReport deliveries(const Cmsn& net);

Rational capacity(const Cmsn& net);
Rational absolute_capacity(const Cmsn& net);

/// Minimum number of hops for the packet created at event `event_index`
/// (0-based) to reach sensor x, or nullopt when unreachable. A sensor in the
/// event itself is reached in 0 hops.
std::optional<int> min_hops(const Cmsn& net, int event_index, int sensor);

/// hops[k][x-1] = min hops from event k to sensor x; -1 when unreachable.
std::vector<std::vector<int>> min_hops_all(const Cmsn& net);

}  // namespace msn
