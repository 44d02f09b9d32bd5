#include "msn/realize.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "msn/wiring.hpp"

namespace msn {

std::optional<ParallelClasses> parallel_classes(const Cmsn& net) {
  validate(net);
  const int n = net.n;
  std::vector<std::vector<bool>> crossing(n + 1, std::vector<bool>(n + 1, false));
  for (const Packet& e : net.events) crossing[e.u][e.v] = crossing[e.v][e.u] = true;

  ParallelClasses pc;
  pc.class_of.assign(n + 1, -1);
  for (int start = 1; start <= n; ++start) {
    if (pc.class_of[start] != -1) continue;
    int id = static_cast<int>(pc.classes.size());
    std::vector<int> component{start};
    pc.class_of[start] = id;
    for (std::size_t head = 0; head < component.size(); ++head) {
      int x = component[head];
      for (int y = 1; y <= n; ++y) {
        if (y == x || crossing[x][y] || pc.class_of[y] != -1) continue;
        pc.class_of[y] = id;
        component.push_back(y);
      }
    }
    // Clique check: within one component no pair may cross.
    for (std::size_t a = 0; a < component.size(); ++a)
      for (std::size_t b = a + 1; b < component.size(); ++b)
        if (crossing[component[a]][component[b]]) return std::nullopt;
    std::sort(component.begin(), component.end());
    pc.classes.push_back(std::move(component));
  }
  return pc;
}

namespace {

using lp::Relation;

// Linear forms over the order-system variables, dense.
using Form = std::vector<Rational>;

struct Analysis {
  int n = 0;
  std::vector<int> cls;  // 1-based line -> class
  std::vector<std::optional<Rational>> slopes;
  int vclass = -1;

  std::vector<int> b0, p, d, b1;  // variable ids per line (-1 = none)
  int num_vars = 0;

  std::vector<int> cluster;        // per event, -1 = singleton
  std::vector<int> cluster_rep;    // per cluster, a vertical line id
  lp::LinearSystem system;

  // Leading-order coordinates of each event, for candidate-slope search.
  std::vector<Form> event_x, event_y;
};

Form zero_form(const Analysis& a) { return Form(a.num_vars, Rational(0)); }

// Leading-order crossing coordinates of an event.
void event_coords(const Analysis& a, const Packet& e, Form& x, Form& y) {
  x = zero_form(a);
  y = zero_form(a);
  int u = e.u, v = e.v;
  bool uv = !a.slopes[a.cls[u]].has_value();
  bool vv = !a.slopes[a.cls[v]].has_value();
  if (uv || vv) {
    if (uv) std::swap(u, v);  // v is the vertical one
    const Rational& k = *a.slopes[a.cls[u]];
    x[a.p[v]] = 1;
    y[a.p[v]] = k;
    y[a.b0[u]] = 1;
  } else {
    const Rational& ku = *a.slopes[a.cls[u]];
    const Rational& kv = *a.slopes[a.cls[v]];
    Rational inv = Rational(1) / (ku - kv);
    x[a.b0[v]] = inv;
    x[a.b0[u]] = -inv;
    // y = ku * x + b0_u
    y[a.b0[v]] = ku * inv;
    y[a.b0[u]] = 1 - ku * inv;
  }
}

Form secondary_form(const Analysis& a, const Packet& e, int tilt) {
  Form s = zero_form(a);
  int u = e.u, v = e.v;
  bool uv = !a.slopes[a.cls[u]].has_value();
  bool vv = !a.slopes[a.cls[v]].has_value();
  if (uv || vv) {
    if (uv) std::swap(u, v);  // v vertical, u finite
    const Rational& k = *a.slopes[a.cls[u]];
    s[a.p[v]] += Rational(tilt) * k;
    s[a.b0[u]] += Rational(tilt);
    s[a.d[v]] += 1;
  } else {
    const Rational& ku = *a.slopes[a.cls[u]];
    const Rational& kv = *a.slopes[a.cls[v]];
    Rational inv = Rational(1) / (ku - kv);
    s[a.b1[v]] += inv;
    s[a.b1[u]] -= inv;
  }
  return s;
}

Form difference(const Form& hi, const Form& lo) {
  Form out = hi;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= lo[i];
  return out;
}

// nullopt when the event set cannot come from this class structure at all.
std::optional<Analysis> analyze(const Cmsn& net,
                                const std::vector<std::optional<Rational>>& slopes,
                                const std::vector<int>& assignment, int tilt,
                                bool with_secondary, std::string* why) {
  const int n = net.n;
  const int k = static_cast<int>(slopes.size());
  if (static_cast<int>(assignment.size()) != n)
    throw RealizeError(RealizeError::Code::bad_arguments,
                       "class assignment must list all sensors");
  int verticals = 0;
  for (int c = 0; c < k; ++c)
    if (!slopes[c].has_value()) ++verticals;
  if (verticals > 1)
    throw RealizeError(RealizeError::Code::bad_arguments, "at most one vertical class");
  for (int c = 0; c < k; ++c)
    for (int c2 = c + 1; c2 < k; ++c2)
      if (slopes[c].has_value() && slopes[c2].has_value() && *slopes[c] == *slopes[c2])
        throw RealizeError(RealizeError::Code::bad_arguments, "slopes must be distinct");

  Analysis a;
  a.n = n;
  a.slopes = slopes;
  a.cls.assign(n + 1, -1);
  for (int i = 1; i <= n; ++i) {
    int c = assignment[i - 1];
    if (c < 0 || c >= k)
      throw RealizeError(RealizeError::Code::bad_arguments, "class index out of range");
    a.cls[i] = c;
    if (!slopes[c].has_value()) a.vclass = c;
  }

  // The event set must be exactly the cross-class pairs.
  std::set<Packet> events(net.events.begin(), net.events.end());
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      bool cross = a.cls[i] != a.cls[j];
      bool listed = events.count(packet(i, j)) != 0;
      if (cross != listed) {
        if (why)
          *why = "event set incompatible with the class assignment (pair {" +
                 std::to_string(i) + "," + std::to_string(j) + "})";
        return std::nullopt;
      }
    }

  a.b0.assign(n + 1, -1);
  a.p.assign(n + 1, -1);
  a.d.assign(n + 1, -1);
  a.b1.assign(n + 1, -1);
  int idx = 0;
  for (int i = 1; i <= n; ++i)
    if (slopes[a.cls[i]].has_value()) a.b0[i] = idx++;
  for (int i = 1; i <= n; ++i)
    if (!slopes[a.cls[i]].has_value()) {
      a.p[i] = idx++;
      a.d[i] = idx++;
    }
  if (a.vclass != -1)  // first-order corrections matter only near a vertical
    for (int i = 1; i <= n; ++i)
      if (a.b0[i] != -1) a.b1[i] = idx++;
  a.num_vars = idx;
  a.system.num_vars = idx;

  const auto length = static_cast<long long>(net.events.size());

  // Vertical spans -> merged clusters; every event inside a span is pinned
  // to the cluster's position at leading order.
  a.cluster.assign(net.events.size(), -1);
  if (a.vclass != -1) {
    std::map<int, std::pair<long long, long long>> by_line;  // line -> [first, last]
    for (long long t = 0; t < length; ++t) {
      const Packet& e = net.events[static_cast<std::size_t>(t)];
      for (int x : {e.u, e.v})
        if (a.cls[x] == a.vclass) {
          auto [it, fresh] = by_line.insert({x, {t, t}});
          if (!fresh) it->second.second = t;
        }
    }
    std::vector<std::pair<std::pair<long long, long long>, int>> sorted;
    for (const auto& [line, span] : by_line) sorted.push_back({span, line});
    std::sort(sorted.begin(), sorted.end());

    std::vector<std::pair<long long, long long>> merged;
    for (const auto& [span, line] : sorted) {
      if (!merged.empty() && span.first <= merged.back().second) {
        merged.back().second = std::max(merged.back().second, span.second);
      } else {
        merged.push_back(span);
        a.cluster_rep.push_back(line);
      }
    }
    for (std::size_t ci = 0; ci < merged.size(); ++ci)
      for (long long t = merged[ci].first; t <= merged[ci].second; ++t)
        a.cluster[static_cast<std::size_t>(t)] = static_cast<int>(ci);

    // Equalities: every vertical line in a cluster shares the cluster
    // position; captured finite-pair events sit at that position too.
    std::vector<Form> xs(net.events.size()), ys(net.events.size());
    for (std::size_t t = 0; t < net.events.size(); ++t)
      event_coords(a, net.events[t], xs[t], ys[t]);

    std::set<std::pair<int, int>> pinned;  // (cluster, vertical line)
    for (std::size_t t = 0; t < net.events.size(); ++t) {
      int ci = a.cluster[t];
      if (ci == -1) continue;
      const Packet& e = net.events[t];
      int rep = a.cluster_rep[static_cast<std::size_t>(ci)];
      bool vert_member = false;
      for (int x : {e.u, e.v})
        if (a.cls[x] == a.vclass) {
          vert_member = true;
          if (x != rep && pinned.insert({ci, x}).second) {
            Form eq = zero_form(a);
            eq[a.p[x]] = 1;
            eq[a.p[rep]] -= 1;
            a.system.add(std::move(eq), Relation::equal);
          }
        }
      if (!vert_member) {
        Form eq = xs[t];
        eq[a.p[rep]] -= 1;
        a.system.add(std::move(eq), Relation::equal);
      }
    }
  }

  // Event-order constraints.
  std::vector<Form> xs(net.events.size());
  {
    Form ytmp;
    for (std::size_t t = 0; t < net.events.size(); ++t)
      event_coords(a, net.events[t], xs[t], ytmp);
  }
  for (std::size_t t = 0; t + 1 < net.events.size(); ++t) {
    int c1 = a.cluster[t];
    int c2 = a.cluster[t + 1];
    if (c1 != -1 && c1 == c2) {
      if (!with_secondary) continue;
      Form lo = secondary_form(a, net.events[t], tilt);
      Form hi = secondary_form(a, net.events[t + 1], tilt);
      a.system.add(difference(hi, lo), Relation::greater);
    } else {
      a.system.add(difference(xs[t + 1], xs[t]), Relation::greater);
    }
  }

  a.event_x.resize(net.events.size());
  a.event_y.resize(net.events.size());
  for (std::size_t t = 0; t < net.events.size(); ++t)
    event_coords(a, net.events[t], a.event_x[t], a.event_y[t]);
  return a;
}

Rational eval(const Form& f, const std::vector<Rational>& x) {
  Rational v = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] != 0) v += f[i] * x[i];
  return v;
}

bool networks_match(const Cmsn& made, const Cmsn& want) {
  return made.n == want.n && made.events == want.events;
}

// Realizes the witness: tilts the vertical class to slope tilt*M and adds
// the first-order intercept corrections, doubling M until regeneration
// reproduces the input exactly.
std::optional<Arrangement> materialize(const Analysis& a, const std::vector<Rational>& vals,
                                       const Cmsn& net, int tilt) {
  if (a.vclass == -1) {
    Arrangement arr;
    arr.lines.reserve(a.n);
    for (int i = 1; i <= a.n; ++i)
      arr.lines.push_back(make_line(*a.slopes[a.cls[i]], vals[a.b0[i]]));
    try {
      if (networks_match(cmsn_from_arrangement(arr, TiePolicy::stable_if_disjoint), net))
        return arr;
    } catch (const GeometryError&) {
    }
    return std::nullopt;
  }

  Rational steep(64);
  for (int attempt = 0; attempt < 100; ++attempt, steep *= 2) {
    bool slope_clash = false;
    for (int c = 0; c < static_cast<int>(a.slopes.size()); ++c)
      if (a.slopes[c].has_value() && *a.slopes[c] == Rational(tilt) * steep)
        slope_clash = true;
    if (slope_clash) continue;
    Arrangement arr;
    arr.lines.reserve(a.n);
    for (int i = 1; i <= a.n; ++i) {
      if (a.cls[i] == a.vclass) {
        Rational slope = Rational(tilt) * steep;
        Rational intercept = -Rational(tilt) * (steep * vals[a.p[i]] + vals[a.d[i]]);
        arr.lines.push_back(make_line(slope, intercept));
      } else {
        arr.lines.push_back(
            make_line(*a.slopes[a.cls[i]], vals[a.b0[i]] + vals[a.b1[i]] / steep));
      }
    }
    try {
      if (networks_match(cmsn_from_arrangement(arr, TiePolicy::stable_if_disjoint), net))
        return arr;
    } catch (const GeometryError&) {
    }
  }
  return std::nullopt;
}

RealizeResult realize_with_analysis(const Cmsn& net,
                                    const std::vector<std::optional<Rational>>& slopes,
                                    const std::vector<int>& assignment, int tilt) {
  RealizeResult out;
  std::string why;
  auto a = analyze(net, slopes, assignment, tilt, true, &why);
  if (!a) {
    out.certificate_note = why;
    return out;
  }
  auto witness = lp::feasible_strict(a->system);
  if (!witness) {
    out.certificate_note = "event-order system infeasible";
    return out;
  }
  auto arr = materialize(*a, witness->values, net, tilt);
  if (!arr) {
    // Should not happen when the system is feasible; never accepted silently.
    out.certificate_note = "witness verification failed (order system feasible)";
    return out;
  }
  out.realizable = true;
  out.witness = std::move(arr);
  out.certificate_note = "verified witness";
  return out;
}

std::vector<int> singleton_assignment(const ParallelClasses& pc, int n) {
  std::vector<int> assignment(n);
  for (int i = 1; i <= n; ++i) assignment[i - 1] = pc.class_of[i];
  return assignment;
}

}  // namespace

lp::LinearSystem build_order_system(const Cmsn& net,
                                    const std::vector<std::optional<Rational>>& slopes,
                                    const std::vector<int>& class_assignment,
                                    int tilt_sign) {
  std::string why;
  auto a = analyze(net, slopes, class_assignment, tilt_sign, true, &why);
  if (!a) throw RealizeError(RealizeError::Code::bad_arguments, why);
  return a->system;
}

RealizeResult realize_with_slopes(const Cmsn& net,
                                  const std::vector<std::optional<Rational>>& slopes,
                                  const std::vector<int>& class_assignment) {
  validate(net);
  RealizeResult out;

  if (net.events.empty()) {
    // Only a single parallel class can generate no events.
    std::set<int> used(class_assignment.begin(), class_assignment.end());
    if (used.size() != 1 || net.n < 1) {
      out.certificate_note = "event set incompatible with the class assignment";
      return out;
    }
    int c = *used.begin();
    Arrangement arr;
    for (int i = 1; i <= net.n; ++i) {
      if (slopes[c].has_value())
        arr.lines.push_back(make_line(*slopes[c], Rational(i)));
      else
        arr.lines.push_back(make_line(Rational(64), Rational(-64) * i));
    }
    out.realizable = true;
    out.witness = std::move(arr);
    out.certificate_note = "single parallel class";
    return out;
  }

  bool has_vertical =
      std::any_of(slopes.begin(), slopes.end(), [](const auto& s) { return !s.has_value(); });
  for (int tilt : {+1, -1}) {
    out = realize_with_analysis(net, slopes, class_assignment, tilt);
    if (out.realizable || !has_vertical) return out;
  }
  out.certificate_note = "event-order system infeasible for both tilt signs";
  return out;
}

namespace {

struct SubNetwork {
  Cmsn net;
  std::vector<int> assignment;                  // per sub line, 0-based
  std::vector<std::optional<Rational>> slopes;  // sub class slopes
};

// Restriction of the input to the listed classes, relabeled 1..m; event
// order is the induced subsequence.
SubNetwork restrict_to(const Cmsn& net, const ParallelClasses& pc,
                       const std::vector<int>& keep_classes,
                       const std::vector<std::optional<Rational>>& sub_slopes) {
  SubNetwork sub;
  std::vector<int> new_id(net.n + 1, 0);
  int m = 0;
  for (int i = 1; i <= net.n; ++i) {
    auto it = std::find(keep_classes.begin(), keep_classes.end(), pc.class_of[i]);
    if (it == keep_classes.end()) continue;
    new_id[i] = ++m;
    sub.assignment.push_back(static_cast<int>(it - keep_classes.begin()));
  }
  sub.net.n = m;
  sub.net.kind = NetworkKind::cmsn;
  for (const Packet& e : net.events)
    if (new_id[e.u] && new_id[e.v])
      sub.net.events.push_back(packet(new_id[e.u], new_id[e.v]));
  sub.slopes = sub_slopes;
  return sub;
}

// Boundary values for one unknown slope: when the slope of a class crosses
// the boundary of the feasible set, in the limit some of its lines pass
// through two crossings of the fixed-slope sub-arrangement, so the boundary
// value is an extremum of (y_w - y_v)/(x_w - x_v) over the sub-region.
std::vector<Rational> boundary_candidates(const SubNetwork& sub) {
  std::vector<Rational> values;
  for (const auto& s : sub.slopes) values.push_back(*s);

  std::string why;
  auto analysis = analyze(sub.net, sub.slopes, sub.assignment, +1, true, &why);
  if (!analysis) return values;
  lp::LinearSystem closure = analysis->system;
  for (auto& c : closure.constraints)
    if (c.rel == Relation::greater) c.rel = Relation::greater_equal;

  const auto& events = sub.net.events;
  for (std::size_t i = 0; i < events.size(); ++i)
    for (std::size_t j = i + 1; j < events.size(); ++j) {
      const Packet& e = events[i];
      const Packet& f = events[j];
      if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) continue;
      Form dy = difference(analysis->event_y[j], analysis->event_y[i]);
      Form dx = difference(analysis->event_x[j], analysis->event_x[i]);
      for (int sign : {+1, -1}) {
        Form numer = dy;
        if (sign < 0)
          for (auto& v : numer) v = -v;
        auto r = lp::maximize_linear_fractional(numer, dx, closure);
        if (r.status == lp::LfpResult::Status::optimal)
          values.push_back(sign < 0 ? Rational(-r.value) : r.value);
      }
    }
  return values;
}

// Simplest rational strictly inside (lo, hi): continued-fraction walk.
Rational simplest_rational_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw RealizeError(RealizeError::Code::bad_arguments, "empty interval");
  BigInt floor_lo = numerator(lo) >= 0 ? numerator(lo) / denominator(lo)
                                       : -((-numerator(lo) + denominator(lo) - 1) /
                                           denominator(lo));
  Rational base(floor_lo);
  // The smallest integer above lo settles it whenever it fits.
  if (base + 1 < hi) return Rational(base + 1);
  Rational a = lo - base, b = hi - base;  // now 0 <= a < b <= 1
  if (a == 0) {
    BigInt q = denominator(b) / numerator(b) + 1;  // smallest q with 1/q < b
    return base + Rational(BigInt(1), q);
  }
  // invert and recurse: x in (a,b) <-> 1/x in (1/b, 1/a)
  Rational inner = simplest_rational_between(Rational(1) / b, Rational(1) / a);
  return base + Rational(1) / inner;
}

using SlopeTester = std::function<bool(const Rational&)>;

// Cheap first-round values worth trying before any candidate enumeration.
const Rational kSimpleSlopes[] = {
    Rational(-1),    Rational(2),    Rational(1, 2), Rational(-1, 2),
    Rational(-2),    Rational(3),    Rational(1, 3), Rational(3, 2),
    Rational(2, 3),  Rational(-3),   Rational(4),    Rational(-1, 3),
    Rational(-3, 2), Rational(1, 4), Rational(5),    Rational(-5)};

// Test values derived from a sorted candidate list: the simplest rational in
// every interval of the partition, then small skims past each boundary, then
// breadth-first bisection. If the boundary theory is complete, the feasible
// set spans whole intervals and the first round already decides.
bool search_free_slope(std::vector<Rational> cands, const SlopeTester& test, int budget) {
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  if (cands.empty()) cands = {Rational(0), Rational(1)};

  std::set<Rational> tried;
  auto attempt = [&](const Rational& t) {
    if (budget <= 0 || !tried.insert(t).second) return false;
    --budget;
    return test(t);
  };

  std::vector<std::pair<Rational, Rational>> intervals;
  intervals.push_back({cands.front() - 2, cands.front()});
  for (std::size_t i = 0; i + 1 < cands.size(); ++i)
    intervals.push_back({cands[i], cands[i + 1]});
  intervals.push_back({cands.back(), cands.back() + 2});

  for (const auto& [lo, hi] : intervals)
    if (lo < hi && attempt(simplest_rational_between(lo, hi))) return true;
  if (budget <= 0) return false;

  Rational delta(1, 2);
  for (std::size_t i = 0; i + 1 < cands.size(); ++i)
    if (cands[i] < cands[i + 1])
      delta = std::min(delta, Rational((cands[i + 1] - cands[i]) / 4));
  for (const Rational& c : cands)
    if (c != 0) delta = std::min(delta, Rational(c * c / 2));
  if (delta > 0)
    for (const Rational& c : cands)
      if (attempt(c + delta) || attempt(c - delta)) return true;

  std::vector<std::pair<Rational, Rational>> queue = intervals;
  for (std::size_t head = 0; head < queue.size() && budget > 0; ++head) {
    auto [lo, hi] = queue[head];
    if (!(lo < hi)) continue;
    Rational mid = simplest_rational_between(lo, hi);
    if (attempt(mid)) return true;
    if (queue.size() < 2048) {
      queue.push_back({lo, mid});
      queue.push_back({mid, hi});
    }
  }
  return false;
}

}  // namespace

RealizeResult realize_rgmsn(const Cmsn& net, int max_slopes) {
  if (max_slopes >= 5)
    throw RealizeError(RealizeError::Code::unsupported_slope_count,
                       "supported slope budgets are 1..4");
  if (max_slopes < 1)
    throw RealizeError(RealizeError::Code::bad_arguments, "slope budget must be positive");
  validate(net);
  RealizeResult out;

  // Stage 1: monotone pseudoline validity (necessary for any realization).
  auto wiring = wiring_from_rcmsn(net);
  if (wiring.status == WiringResult::Status::non_realizable) {
    out.certificate_note = "wiring: no monotone pseudoline diagram (event " +
                           std::to_string(wiring.failing_event + 1) + ")";
    return out;
  }

  // Stage 2: parallelism must be transitive.
  auto pc = parallel_classes(net);
  if (!pc) {
    out.certificate_note = "parallel classes: a non-crossing component is not a clique";
    return out;
  }
  const int c = static_cast<int>(pc->classes.size());

  // Stage 3: class count. A class uses exactly one slope, so c decides.
  if (c > max_slopes) {
    out.certificate_note = "class count: " + std::to_string(c) +
                           " parallel classes exceed the budget of " +
                           std::to_string(max_slopes);
    return out;
  }

  std::vector<int> assignment = singleton_assignment(*pc, net.n);

  if (c <= 2) {
    std::vector<std::optional<Rational>> slopes;
    slopes.emplace_back(Rational(1));
    if (c == 2) slopes.emplace_back(Rational(-1));
    out = realize_with_slopes(net, slopes, assignment);
    out.certificate_note = "grid: " + out.certificate_note;
    return out;
  }

  // The final event's classes are normalized to slopes {0, 1}; the remaining
  // class slopes are searched: boundary candidates come from extremal slopes
  // of lines joining two crossings of the fixed-slope sub-arrangement.
  const Packet& last = net.events.back();
  int grid_a = pc->class_of[last.u];
  int grid_b = pc->class_of[last.v];

  if (c == 3) {
    int free_class = 3 - grid_a - grid_b;
    auto test = [&](const Rational& t) {
      if (t == 0 || t == 1) return false;
      std::vector<std::optional<Rational>> slopes(3);
      slopes[grid_a] = Rational(0);
      slopes[grid_b] = Rational(1);
      slopes[free_class] = t;
      RealizeResult r = realize_with_slopes(net, slopes, assignment);
      if (r.realizable) out = std::move(r);
      return out.realizable;
    };
    bool found = false;
    for (const Rational& t : kSimpleSlopes)
      if ((found = test(t))) break;
    if (!found) {
      SubNetwork grid_sub =
          restrict_to(net, *pc, {grid_a, grid_b}, {Rational(0), Rational(1)});
      found = search_free_slope(boundary_candidates(grid_sub), test, 160);
    }
    out.certificate_note = found ? "three classes: verified witness"
                                 : "three classes: no third slope admits a realization";
    out.realizable = found;
    return out;
  }

  // c == 4: two unknown slopes. Cheap joint probes first, then for each
  // role assignment a nested search: outer slope from the grid-only
  // candidates, inner slope re-enumerated per outer value.
  std::vector<int> rest;
  for (int cc = 0; cc < 4; ++cc)
    if (cc != grid_a && cc != grid_b) rest.push_back(cc);

  auto test_pair = [&](const Rational& t, const Rational& k) {
    if (t == 0 || t == 1 || k == 0 || k == 1 || t == k) return false;
    std::vector<std::optional<Rational>> slopes(4);
    slopes[grid_a] = Rational(0);
    slopes[grid_b] = Rational(1);
    slopes[rest[0]] = t;
    slopes[rest[1]] = k;
    RealizeResult r = realize_with_slopes(net, slopes, assignment);
    if (r.realizable) out = std::move(r);
    return out.realizable;
  };

  for (const Rational& t : kSimpleSlopes) {
    for (const Rational& k : kSimpleSlopes)
      if (test_pair(t, k)) break;
    if (out.realizable) break;
  }

  if (!out.realizable) {
    SubNetwork grid_sub =
        restrict_to(net, *pc, {grid_a, grid_b}, {Rational(0), Rational(1)});
    std::vector<Rational> outer_cands = boundary_candidates(grid_sub);

    for (int which = 0; which < 2 && !out.realizable; ++which) {
      int t_class = rest[which];
      int k_class = rest[1 - which];
      auto outer_test = [&](const Rational& t) {
        if (t == 0 || t == 1) return false;
        SubNetwork sub = restrict_to(net, *pc, {grid_a, grid_b, t_class},
                                     {Rational(0), Rational(1), t});
        auto inner_test = [&](const Rational& k) {
          return which == 0 ? test_pair(t, k) : test_pair(k, t);
        };
        for (const Rational& k : kSimpleSlopes)
          if (inner_test(k)) return true;
        return search_free_slope(boundary_candidates(sub), inner_test, 48);
      };
      search_free_slope(outer_cands, outer_test, 24);
    }
  }

  out.certificate_note = out.realizable
                             ? "four classes: verified witness"
                             : "four classes: no slope pair admits a realization";
  return out;
}

}  // namespace msn
