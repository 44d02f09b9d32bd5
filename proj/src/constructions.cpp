#include "msn/constructions.hpp"

#include <algorithm>
#include <set>

#include "msn/core.hpp"
#include "msn/formulas.hpp"

namespace msn::constructions {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ConstructionError(ConstructionError::Code::bad_params, what);
}

// Greedy intercept placement: smallest integer intercept >= `from` whose
// crossings with the existing lines are distinct from each other and from
// all existing crossing x-coordinates.
Rational next_clean_intercept(const Arrangement& arr, const Rational& slope,
                              const std::set<Rational>& xs, const Rational& from) {
  Rational b = from;
  while (true) {
    bool clean = true;
    std::set<Rational> fresh;
    for (const Line& line : arr.lines) {
      if (*line.slope == slope) {
        if (line.intercept == b) clean = false;
        continue;
      }
      Rational x = (b - line.intercept) / (*line.slope - slope);
      if (xs.count(x) || !fresh.insert(x).second) clean = false;
      if (!clean) break;
    }
    if (clean) return b;
    b += 1;
  }
}

void push_line(Arrangement& arr, std::set<Rational>& xs, const Rational& slope,
               const Rational& intercept) {
  for (const Line& line : arr.lines)
    if (*line.slope != slope) xs.insert((intercept - line.intercept) / (*line.slope - slope));
  arr.lines.push_back(make_line(slope, intercept));
}

// Intercept bound placing every crossing of a new slope-`slope` line with
// the existing lines strictly right of `frontier`.
Rational intercept_beyond(const Arrangement& arr, const Rational& slope,
                          const Rational& frontier) {
  // crossing x = (b - b_i) / (k_i - slope); increasing in b iff k_i > slope
  bool increasing = true;
  for (const Line& line : arr.lines)
    if (*line.slope < slope) increasing = false;
  Rational bound;
  bool first = true;
  for (const Line& line : arr.lines) {
    Rational need = line.intercept + (*line.slope - slope) * frontier;
    if (first || (increasing ? need > bound : need < bound)) bound = need;
    first = false;
  }
  return increasing ? Rational(bound + 1) : Rational(bound - 1);
}

Rational max_crossing_x(const Arrangement& arr) {
  Rational best(0);
  bool first = true;
  for (std::size_t i = 0; i < arr.lines.size(); ++i)
    for (std::size_t j = i + 1; j < arr.lines.size(); ++j) {
      if (arr.lines[i].vertical() || arr.lines[j].vertical()) continue;
      if (*arr.lines[i].slope == *arr.lines[j].slope) continue;
      Rational x = intersection_x(arr.lines[i], arr.lines[j]);
      if (first || x > best) best = x;
      first = false;
    }
  return best;
}

// Appends a line of the given slope whose crossings all land right of the
// current rightmost intersection, bumping the intercept until clean.
void append_beyond(Arrangement& arr, std::set<Rational>& xs, const Rational& slope) {
  Rational frontier = max_crossing_x(arr);
  Rational b = intercept_beyond(arr, slope, frontier);
  bool increasing = true;
  for (const Line& line : arr.lines)
    if (*line.slope < slope) increasing = false;
  while (true) {
    bool clean = true;
    std::set<Rational> fresh;
    for (const Line& line : arr.lines) {
      if (*line.slope == slope) continue;
      Rational x = (b - line.intercept) / (*line.slope - slope);
      if (xs.count(x) || !fresh.insert(x).second) clean = false;
      if (!clean) break;
    }
    if (clean) break;
    b += increasing ? 1 : -1;
  }
  push_line(arr, xs, slope, b);
}

}  // namespace

Arrangement min_capacity_gmsn(int n) {
  require(n >= 2, "min_capacity_gmsn needs n >= 2");
  Arrangement arr;
  arr.lines.reserve(n);
  for (int k = 1; k <= n; ++k) {
    // k x + (n+1-k) y = k (n+1-k)
    Rational slope = Rational(-k, n + 1 - k);
    arr.lines.push_back(make_line(slope, Rational(k)));
  }
  return arr;
}

Arrangement max_capacity_gmsn(int n) {
  require(n >= 3, "max_capacity_gmsn needs n >= 3");
  Arrangement arr;
  std::set<Rational> xs;
  for (int s = 2; s <= n - 1; ++s) {
    Rational slope(s);
    Rational b = arr.lines.empty()
                     ? Rational(0)
                     : next_clean_intercept(arr, slope, xs, Rational(0));
    push_line(arr, xs, slope, b);
  }
  append_beyond(arr, xs, Rational(1));  // collector: below every body slope
  append_beyond(arr, xs, Rational(n));  // distributor: above every slope
  return arr;
}

Arrangement grid(int m, int k) {
  require(m >= 1 && k >= 1, "grid needs m, k >= 1");
  int n = m + k;
  require(n >= 3, "grid needs m + k >= 3");
  Arrangement arr;
  arr.lines.reserve(n);
  for (int i = 1; i <= m; ++i)
    arr.lines.push_back(make_line(Rational(1), Rational(i) * (n + 1)));
  for (int j = 1; j <= k; ++j)
    arr.lines.push_back(make_line(Rational(-1), Rational(j)));
  return arr;
}

namespace {

// Pre-rotation picture for the extremal three-slope network: b horizontals,
// v verticals (v-1 near ones plus a far one), w lines of slope -1/2 entering
// right of the near verticals. The order-preserving map
// (x, y) -> (x + y, y - x) then yields slopes {-1, +1, -3}.
Arrangement three_slope_build(int v, int b, int w) {
  Arrangement arr;
  for (int h = 0; h < b; ++h)
    arr.lines.push_back(make_line(Rational(-1), Rational(2 * h)));
  for (int t = 1; t <= v - 1; ++t)
    arr.lines.push_back(make_line(Rational(1), Rational(-2 * t)));
  for (int j = 1; j <= w; ++j) {
    long long s = v + 2ll * (b + j) - 3;  // x + 2y = s
    arr.lines.push_back(make_line(Rational(-3), Rational(2 * s)));
  }
  long long far = 2ll * w + v + 2ll * b;  // x = far
  arr.lines.push_back(make_line(Rational(1), Rational(-2 * far)));
  return arr;
}

}  // namespace

Arrangement three_slope_optimal(int n) {
  require(n >= 4, "three_slope_optimal needs n >= 4");
  long long best_a = 1, best_c = 1;
  Rational best(-1);
  for (long long a = 1; a <= n - 2; ++a)
    for (long long c = a; a + c <= n - 1; ++c) {
      Rational value = formulas::three_slope_capacity(a, n - a - c, c);
      if (value > best) {
        best = value;
        best_a = a;
        best_c = c;
      }
    }
  int b = static_cast<int>(n - best_a - best_c);

  // The capacity expression is symmetric in (a, c); the build is not, so
  // keep whichever realization attains the maximum.
  Arrangement first = three_slope_build(static_cast<int>(best_a), b,
                                        static_cast<int>(best_c));
  if (capacity(cmsn_from_arrangement(first, TiePolicy::stable_if_disjoint)) == best)
    return first;
  Arrangement second = three_slope_build(static_cast<int>(best_c), b,
                                         static_cast<int>(best_a));
  if (capacity(cmsn_from_arrangement(second, TiePolicy::stable_if_disjoint)) == best)
    return second;
  throw ConstructionError(ConstructionError::Code::construction_failed,
                          "three-slope build missed its closed form");
}

namespace {

// Analogous picture with a second path class: c lines of slope -1/3 and one
// of slope -3/5, crossing each other between the far vertical and the rest.
// The same rotation yields slopes {-1, +1, -2, -4}.
Arrangement four_slope_build(int a, int b, int c) {
  Arrangement arr;
  for (int h = 0; h < b; ++h)
    arr.lines.push_back(make_line(Rational(-1), Rational(2 * h)));
  for (int t = 1; t <= a - 1; ++t)
    arr.lines.push_back(make_line(Rational(1), Rational(-2 * t)));
  long long s_last = 0;
  for (int j = 1; j <= c; ++j) {
    long long s = a + 3ll * b + 3ll * j - 4;  // x + 3y = s
    s_last = s;
    arr.lines.push_back(make_line(Rational(-2), Rational(s)));
  }
  long long w = 3 * s_last + 1;  // 3x + 5y = w
  arr.lines.push_back(make_line(Rational(-4), Rational(w)));
  long long s1 = a + 3ll * b - 1;
  Rational far = Rational(3 * w - 5 * s1, 4) + 1;  // x = far
  arr.lines.push_back(make_line(Rational(1), Rational(-2) * far));
  return arr;
}

}  // namespace

Arrangement four_slope_optimal(int n) {
  require(n >= 5, "four_slope_optimal needs n >= 5");
  Rational target = formulas::max4(n);
  Rational best(-1);
  Arrangement winner;
  for (int a : {1, 2}) {
    int rest = n - a - 1;
    for (int b : {(rest + 1) / 2, rest / 2}) {
      int c = rest - b;
      if (b < 1 || c < 1) continue;
      Arrangement arr = four_slope_build(a, b, c);
      Rational value = capacity(cmsn_from_arrangement(arr, TiePolicy::stable_if_disjoint));
      if (value > best) {
        best = value;
        winner = arr;
      }
    }
  }
  if (best != target)
    throw ConstructionError(ConstructionError::Code::construction_failed,
                            "four-slope build missed its closed form");
  return winner;
}

Arrangement collector_distributor_family(int n, int s) {
  require(s >= 3 && n >= s, "collector_distributor_family needs n >= s >= 3");

  // f(a): the delivery bound with a extreme lines per side and the middle
  // split evenly; maximize exactly over the integers.
  auto bound = [&](long long a) {
    Rational A(a), N(n), S(s);
    Rational mid = (N - 2 * A) / (S - 2);
    return N * (A * A + 2 * A * (N - 2 * A) + (S - 2) * (S - 3) / 2 * mid * mid) -
           (N - 2 * A) * A * (2 * A - 1) - A * A * (A - 1);
  };
  long long best_a = 1;
  Rational best = bound(1);
  for (long long a = 2; 2 * a <= n - (s - 2); ++a) {
    Rational value = bound(a);
    if (value > best) {
      best = value;
      best_a = a;
    }
  }

  // Middle classes of near-equal size with slopes 2..s-1.
  int middle_total = static_cast<int>(n - 2 * best_a);
  Arrangement arr;
  std::set<Rational> xs;
  int spare = middle_total % (s - 2);
  int handed = 0;
  for (int cls = 0; cls < s - 2; ++cls) {
    int size = middle_total / (s - 2) + (cls < spare ? 1 : 0);
    Rational slope(cls + 2);
    for (int i = 0; i < size; ++i) {
      Rational b = arr.lines.empty()
                       ? Rational(0)
                       : next_clean_intercept(arr, slope, xs, Rational(0));
      push_line(arr, xs, slope, b);
      ++handed;
    }
  }
  require(handed == middle_total, "internal size bookkeeping");

  // Alternating collector/distributor tail: each extreme line lands right of
  // everything so far; alternation lets every tail crossing reach the whole
  // body within two hops.
  for (long long i = 0; i < 2 * best_a; ++i)
    append_beyond(arr, xs, i % 2 == 0 ? Rational(1) : Rational(s));
  return arr;
}

}  // namespace msn::constructions
