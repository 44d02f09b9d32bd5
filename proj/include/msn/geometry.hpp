#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "msn/core.hpp"
#include "msn/rational.hpp"

namespace msn {

/// A sensor trajectory on the time-position diagram. slope == nullopt means
/// a vertical line, in which case `intercept` is its x-position. Verticals
/// are allowed only where an operation's contract says so.
struct Line {
  std::optional<Rational> slope;
  Rational intercept;

  bool vertical() const { return !slope.has_value(); }
  friend bool operator==(const Line&, const Line&) = default;
};

inline Line make_line(Rational slope, Rational intercept) {
  return Line{std::move(slope), std::move(intercept)};
}
inline Line vertical_line(Rational x_position) {
  return Line{std::nullopt, std::move(x_position)};
}

/// Ordered list of lines; index + 1 = sensor id.
struct Arrangement {
  std::vector<Line> lines;
};

class GeometryError : public Error {
 public:
  enum class Code {
    tie_rejected,
    concurrent_lines,
    identical_lines,
    invalid_map,
    degenerate_sampler,
    too_few_lines,
  };

  GeometryError(Code code, const std::string& what) : Error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

enum class TiePolicy {
  reject,              // any equal intersection x aborts
  stable_if_disjoint,  // equal x allowed between events sharing no line;
                       // such groups are ordered lexicographically by pair
};

/// Events = all intersecting pairs sorted by exact rational intersection
/// x-coordinate. kind = rcmsn iff all slopes are finite and pairwise
/// distinct. Three lines through one point always raise concurrent_lines.
Cmsn cmsn_from_arrangement(const Arrangement& arr, TiePolicy policy = TiePolicy::reject);

/// x-coordinate of the crossing of two non-parallel lines.
Rational intersection_x(const Line& a, const Line& b);

/// x' = alpha*x + beta, y' = gamma*x + delta*y + epsilon with alpha > 0 and
/// delta != 0; preserves the intersection x-order, hence the Cmsn.
Arrangement affine_image(const Arrangement& arr, const Rational& alpha,
                         const Rational& beta, const Rational& gamma,
                         const Rational& delta, const Rational& epsilon);

/// n lines with slope and intercept drawn as dyadic rationals k/2^53 from a
/// SplitMix64 substream of `seed`. Degenerate draws (tied slopes, tied
/// intersection x, concurrency) are rejected and redrawn; aborts with
/// degenerate_sampler after 1000 rejections.
Arrangement sample_gmsn(int n, std::uint64_t seed, int* rejections = nullptr);

/// s slopes uniform on [0,1], each line assigned a slope class uniformly,
/// intercepts uniform on [0,1]; same degeneracy policy. All-parallel draws
/// (zero events) are valid outputs.
Arrangement sample_rgmsn(int n, int s, std::uint64_t seed, int* rejections = nullptr);

}  // namespace msn
