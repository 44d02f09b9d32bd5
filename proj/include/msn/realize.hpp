#pragma once

#include <optional>
#include <string>
#include <vector>

#include "msn/core.hpp"
#include "msn/geometry.hpp"
#include "msn/lp.hpp"

namespace msn {

class RealizeError : public Error {
 public:
  enum class Code { unsupported_slope_count, bad_arguments };
  RealizeError(Code code, const std::string& what) : Error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

/// Partition of sensors by the non-crossing graph (two sensors are joined
/// when their pair never appears). Valid only when every component is a
/// clique: parallelism is transitive for straight lines.
struct ParallelClasses {
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;  // size n+1, 0-based class index per sensor
};

/// nullopt when some non-crossing component is not a clique, in which case
/// the network is not realizable by straight lines at all.
std::optional<ParallelClasses> parallel_classes(const Cmsn& net);

struct RealizeResult {
  bool realizable = false;
  std::optional<Arrangement> witness;
  std::string certificate_note;  // which stage decided
};

/// One slope per class; nullopt marks the near-vertical class (at most one),
/// realized as a finite but arbitrarily steep slope with both tilt signs
/// tried. On success the witness regenerates the input exactly (verified
/// with the stable-if-disjoint tie policy before returning).
RealizeResult realize_with_slopes(const Cmsn& net,
                                  const std::vector<std::optional<Rational>>& slopes,
                                  const std::vector<int>& class_assignment);

/// Decides whether the CMSN is generated by an arrangement with at most
/// `max_slopes` slopes (supported: 1..4). Pipeline: wiring validity,
/// parallel-class clique check, class count, then the slope-count cases;
/// c <= 2 is a grid, c = 3 is one order LP per tilt sign, c = 4 enumerates
/// candidate fourth slopes via linear-fractional optimization.
RealizeResult realize_rgmsn(const Cmsn& net, int max_slopes);

/// The event-order system behind realize_with_slopes, exposed so tests can
/// cross-check the simplex against the Fourier-Motzkin eliminator.
/// Variables: intercepts for finite-slope lines (leading order), then
/// positions and sub-positions for the vertical class, then first-order
/// intercept corrections. Homogeneous; strict rows encode the event order.
lp::LinearSystem build_order_system(const Cmsn& net,
                                    const std::vector<std::optional<Rational>>& slopes,
                                    const std::vector<int>& class_assignment,
                                    int tilt_sign);

}  // namespace msn
