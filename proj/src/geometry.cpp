#include "msn/geometry.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "msn/rng.hpp"

namespace msn {

Rational intersection_x(const Line& a, const Line& b) {
  if (a.vertical() && b.vertical())
    throw GeometryError(GeometryError::Code::invalid_map, "parallel vertical lines do not meet");
  if (a.vertical()) return a.intercept;
  if (b.vertical()) return b.intercept;
  if (*a.slope == *b.slope)
    throw GeometryError(GeometryError::Code::invalid_map, "parallel lines do not meet");
  return (b.intercept - a.intercept) / (*a.slope - *b.slope);
}

namespace {

bool lines_parallel(const Line& a, const Line& b) {
  if (a.vertical() || b.vertical()) return a.vertical() && b.vertical();
  return *a.slope == *b.slope;
}

}  // namespace

Cmsn cmsn_from_arrangement(const Arrangement& arr, TiePolicy policy) {
  const int n = static_cast<int>(arr.lines.size());
  if (n < 2)
    throw GeometryError(GeometryError::Code::too_few_lines, "need at least 2 lines");

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (arr.lines[i] == arr.lines[j])
        throw GeometryError(GeometryError::Code::identical_lines,
                            "lines " + std::to_string(i + 1) + " and " +
                                std::to_string(j + 1) + " are identical");

  struct Crossing {
    Rational x;
    Packet pair;
  };
  std::vector<Crossing> crossings;
  bool all_finite_distinct = true;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (lines_parallel(arr.lines[i], arr.lines[j])) {
        all_finite_distinct = false;
        continue;
      }
      if (arr.lines[i].vertical() || arr.lines[j].vertical()) all_finite_distinct = false;
      crossings.push_back({intersection_x(arr.lines[i], arr.lines[j]), packet(i + 1, j + 1)});
    }
  }

  std::sort(crossings.begin(), crossings.end(), [](const Crossing& a, const Crossing& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.pair < b.pair;
  });

  // Equal-x groups: a shared line means three lines through one point.
  for (std::size_t i = 0; i + 1 < crossings.size(); ++i) {
    std::size_t j = i;
    while (j + 1 < crossings.size() && crossings[j + 1].x == crossings[i].x) ++j;
    if (j == i) continue;
    for (std::size_t a = i; a <= j; ++a)
      for (std::size_t b = a + 1; b <= j; ++b) {
        const Packet& pa = crossings[a].pair;
        const Packet& pb = crossings[b].pair;
        if (pa.u == pb.u || pa.u == pb.v || pa.v == pb.u || pa.v == pb.v)
          throw GeometryError(GeometryError::Code::concurrent_lines,
                              "three lines pass through one point");
      }
    if (policy == TiePolicy::reject)
      throw GeometryError(GeometryError::Code::tie_rejected,
                          "two intersections share an x-coordinate");
    i = j;
  }

  Cmsn net;
  net.n = n;
  net.kind = all_finite_distinct ? NetworkKind::rcmsn : NetworkKind::cmsn;
  net.events.reserve(crossings.size());
  for (const Crossing& c : crossings) net.events.push_back(c.pair);
  return net;
}

Arrangement affine_image(const Arrangement& arr, const Rational& alpha,
                         const Rational& beta, const Rational& gamma,
                         const Rational& delta, const Rational& epsilon) {
  if (alpha <= 0 || delta == 0)
    throw GeometryError(GeometryError::Code::invalid_map,
                        "require alpha > 0 and delta != 0");
  Arrangement image;
  image.lines.reserve(arr.lines.size());
  for (const Line& line : arr.lines) {
    if (line.vertical()) {
      image.lines.push_back(vertical_line(alpha * line.intercept + beta));
    } else {
      Rational new_slope = (gamma + delta * *line.slope) / alpha;
      Rational new_intercept = delta * line.intercept + epsilon - new_slope * beta;
      image.lines.push_back(make_line(new_slope, new_intercept));
    }
  }
  return image;
}

namespace {

constexpr int kMaxRejections = 1000;

bool arrangement_clean(const Arrangement& arr) {
  try {
    cmsn_from_arrangement(arr, TiePolicy::reject);
    return true;
  } catch (const GeometryError&) {
    return false;
  }
}

// All-parallel families never reach cmsn_from_arrangement's n >= 2 events;
// treat "no crossing at all" as clean (valid 0-event cmsn).
bool rgmsn_clean(const Arrangement& arr) {
  bool any_crossing = false;
  for (std::size_t i = 0; i < arr.lines.size() && !any_crossing; ++i)
    for (std::size_t j = i + 1; j < arr.lines.size(); ++j)
      if (!(arr.lines[i].vertical() == arr.lines[j].vertical() &&
            (arr.lines[i].vertical() || *arr.lines[i].slope == *arr.lines[j].slope))) {
        any_crossing = true;
        break;
      }
  if (!any_crossing) {
    std::set<std::pair<bool, Rational>> seen;
    for (const Line& l : arr.lines)
      if (!seen.insert({l.vertical(), l.intercept}).second) return false;
    return true;
  }
  return arrangement_clean(arr);
}

}  // namespace

Arrangement sample_gmsn(int n, std::uint64_t seed, int* rejections) {
  if (n < 2)
    throw GeometryError(GeometryError::Code::too_few_lines, "need n >= 2");
  SplitMix64 gen = substream(seed, "geometry.sample_gmsn", 0);
  int rejected = 0;
  while (true) {
    Arrangement arr;
    arr.lines.reserve(n);
    for (int i = 0; i < n; ++i) {
      Rational slope = uniform_dyadic(gen);
      Rational intercept = uniform_dyadic(gen);
      arr.lines.push_back(make_line(slope, intercept));
    }
    if (arrangement_clean(arr)) {
      if (rejections) *rejections = rejected;
      return arr;
    }
    if (++rejected > kMaxRejections)
      throw GeometryError(GeometryError::Code::degenerate_sampler,
                          "sampler rejected 1000 degenerate draws");
  }
}

Arrangement sample_rgmsn(int n, int s, std::uint64_t seed, int* rejections) {
  if (n < 2 || s < 1)
    throw GeometryError(GeometryError::Code::too_few_lines, "need n >= 2 and s >= 1");
  SplitMix64 gen = substream(seed, "geometry.sample_rgmsn", 0);
  int rejected = 0;
  while (true) {
    std::vector<Rational> slopes;
    slopes.reserve(s);
    bool dup = false;
    for (int k = 0; k < s; ++k) {
      Rational slope = uniform_dyadic(gen);
      if (std::find(slopes.begin(), slopes.end(), slope) != slopes.end()) dup = true;
      slopes.push_back(slope);
    }
    Arrangement arr;
    arr.lines.reserve(n);
    for (int i = 0; i < n; ++i) {
      auto cls = static_cast<std::size_t>(uniform_below(gen, s));
      arr.lines.push_back(make_line(slopes[cls], uniform_dyadic(gen)));
    }
    if (!dup && rgmsn_clean(arr)) {
      if (rejections) *rejections = rejected;
      return arr;
    }
    if (++rejected > kMaxRejections)
      throw GeometryError(GeometryError::Code::degenerate_sampler,
                          "sampler rejected 1000 degenerate draws");
  }
}

}  // namespace msn
