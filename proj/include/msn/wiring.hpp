#pragma once

#include <optional>
#include <vector>

#include "msn/core.hpp"

namespace msn {

/// Monotone pseudoline normal form: sigma is the top-to-bottom label order
/// left of all crossings, positions[k] (1-based, in 1..n-1) is where the
/// k-th adjacent transposition happens.
struct WiringDiagram {
  int n = 0;
  std::vector<int> sigma;
  std::vector<int> positions;

  friend bool operator==(const WiringDiagram&, const WiringDiagram&) = default;
};

class WiringError : public Error {
 public:
  enum class Code { repeated_crossing, bad_diagram };
  WiringError(Code code, const std::string& what) : Error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

/// Replays the diagram: c_k = {tau(a_k), tau(a_k+1)}, then swap. Throws
/// repeated_crossing when a pair crosses twice.
Cmsn rcmsn_from_wiring(const WiringDiagram& w);

/// The linked-list phase is written in the source two ways. The paper's
/// pseudocode leaves the already-linked case swap-free; that variant rejects
/// some realizable inputs (the exhaustive-search oracle arbitrates), so the
/// unconditional swap is the default.
enum class Phase1Variant { unconditional_swap, paper_faithful };

struct WiringResult {
  enum class Status {
    ok,             // diagram found, replay verified
    non_realizable, // a definite violation; failing_event is its index
    indeterminate,  // fragment order could not be pinned down (cmsn only)
  };

  Status status = Status::indeterminate;
  std::optional<WiringDiagram> diagram;
  int failing_event = -1;  // 0-based index of the earliest violating event
};

/// Phase 1 infers the initial order via the degree-<=2 linked-list
/// construction; phase 2 replays with the adjacency check and is
/// authoritative. Of the two list readings the lexicographically smaller
/// sigma is returned. Accepts cmsn inputs: pairs in the same parallel class
/// never appear and the list phase runs on crossing pairs only.
WiringResult wiring_from_rcmsn(const Cmsn& net,
                               Phase1Variant variant = Phase1Variant::unconditional_swap);

/// Replays `net` against a fixed initial order; nullopt when some crossing
/// is not adjacent at its turn. Used by phase 2 and by tests.
std::optional<WiringDiagram> replay_with_order(const Cmsn& net,
                                               const std::vector<int>& sigma);

}  // namespace msn
