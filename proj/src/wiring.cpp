#include "msn/wiring.hpp"

#include <algorithm>
#include <set>

namespace msn {

Cmsn rcmsn_from_wiring(const WiringDiagram& w) {
  if (w.n < 2 || static_cast<int>(w.sigma.size()) != w.n)
    throw WiringError(WiringError::Code::bad_diagram, "sigma must be a permutation of 1..n");
  std::vector<bool> seen(w.n + 1, false);
  for (int label : w.sigma) {
    if (label < 1 || label > w.n || seen[label])
      throw WiringError(WiringError::Code::bad_diagram, "sigma must be a permutation of 1..n");
    seen[label] = true;
  }

  std::vector<int> order = w.sigma;  // order[p-1] = label at position p
  std::set<Packet> crossed;
  Cmsn net;
  net.n = w.n;
  net.events.reserve(w.positions.size());
  for (int pos : w.positions) {
    if (pos < 1 || pos >= w.n)
      throw WiringError(WiringError::Code::bad_diagram, "transposition position out of range");
    Packet p = packet(order[pos - 1], order[pos]);
    if (!crossed.insert(p).second)
      throw WiringError(WiringError::Code::repeated_crossing,
                        "pair {" + std::to_string(p.u) + "," + std::to_string(p.v) +
                            "} would cross twice");
    net.events.push_back(p);
    std::swap(order[pos - 1], order[pos]);
  }
  net.kind = BigInt(net.events.size()) == binomial2(w.n) ? NetworkKind::rcmsn
                                                         : NetworkKind::cmsn;
  return net;
}

std::optional<WiringDiagram> replay_with_order(const Cmsn& net,
                                               const std::vector<int>& sigma) {
  const int n = net.n;
  std::vector<int> pos(n + 1, 0);
  for (int p = 1; p <= n; ++p) pos[sigma[p - 1]] = p;
  std::vector<int> order = sigma;

  WiringDiagram w;
  w.n = n;
  w.sigma = sigma;
  w.positions.reserve(net.events.size());
  for (const Packet& e : net.events) {
    int pu = pos[e.u], pv = pos[e.v];
    if (pu > pv) std::swap(pu, pv);
    if (pv - pu != 1) return std::nullopt;
    w.positions.push_back(pu);
    std::swap(order[pu - 1], order[pv - 1]);
    pos[order[pu - 1]] = pu;
    pos[order[pv - 1]] = pv;
  }
  return w;
}

namespace {

struct LinkedList {
  // neighbor[x] = up to two adjacent labels in the inferred initial order
  std::vector<std::array<int, 2>> neighbor;
  std::vector<int> degree;

  explicit LinkedList(int n) : neighbor(n + 1, {0, 0}), degree(n + 1, 0) {}

  bool linked(int a, int b) const {
    return (degree[a] > 0 && (neighbor[a][0] == b || neighbor[a][1] == b));
  }
  bool full(int x) const { return degree[x] == 2; }
  void link(int a, int b) {
    neighbor[a][degree[a]++] = b;
    neighbor[b][degree[b]++] = a;
  }

  // Walks from `start` away from link-parent; returns the path.
  std::vector<int> walk(int start) const {
    std::vector<int> path{start};
    int prev = 0, cur = start;
    while (true) {
      int next = 0;
      for (int k = 0; k < degree[cur]; ++k)
        if (neighbor[cur][k] != prev) next = neighbor[cur][k];
      if (next == 0) break;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    return path;
  }

  // Would linking a and b close a cycle?
  bool same_fragment(int a, int b) const {
    std::vector<int> path = walk(a);
    return std::find(path.begin(), path.end(), b) != path.end();
  }
};

std::optional<WiringDiagram> canonical_replay(const Cmsn& net, std::vector<int> sigma) {
  auto forward = replay_with_order(net, sigma);
  std::reverse(sigma.begin(), sigma.end());
  auto mirrored = replay_with_order(net, sigma);
  if (forward && mirrored)
    return forward->sigma < mirrored->sigma ? forward : mirrored;
  if (forward) return forward;
  return mirrored;
}

}  // namespace

WiringResult wiring_from_rcmsn(const Cmsn& net, Phase1Variant variant) {
  validate(net);
  const int n = net.n;
  WiringResult result;

  // Phase 1: infer adjacency of the initial order. tau(x) tracks the label
  // that started at x's current slot.
  std::vector<int> tau(n + 1);
  for (int x = 1; x <= n; ++x) tau[x] = x;
  LinkedList list(n);

  for (std::size_t k = 0; k < net.events.size(); ++k) {
    const Packet& e = net.events[k];
    int a = tau[e.u], b = tau[e.v];
    if (list.linked(a, b)) {
      if (variant == Phase1Variant::unconditional_swap) std::swap(tau[e.u], tau[e.v]);
      continue;
    }
    if (list.full(a) || list.full(b) || (list.degree[a] > 0 && list.same_fragment(a, b))) {
      result.status = WiringResult::Status::non_realizable;
      result.failing_event = static_cast<int>(k);
      return result;
    }
    list.link(a, b);
    std::swap(tau[e.u], tau[e.v]);
  }

  // Collect fragments: maximal paths (isolated labels are length-1 paths).
  std::vector<std::vector<int>> fragments;
  std::vector<bool> used(n + 1, false);
  for (int x = 1; x <= n; ++x) {
    if (used[x] || list.degree[x] > 1) continue;
    std::vector<int> path = list.walk(x);
    for (int y : path) used[y] = true;
    fragments.push_back(std::move(path));
  }

  if (fragments.size() == 1) {
    auto diagram = canonical_replay(net, fragments.front());
    if (diagram) {
      result.status = WiringResult::Status::ok;
      result.diagram = std::move(diagram);
    } else {
      // Phase 2 is authoritative: find the earliest failing event.
      result.status = WiringResult::Status::non_realizable;
      std::vector<int> pos(n + 1, 0);
      std::vector<int> order = fragments.front();
      for (int p = 1; p <= n; ++p) pos[order[p - 1]] = p;
      for (std::size_t k = 0; k < net.events.size(); ++k) {
        const Packet& e = net.events[k];
        int pu = pos[e.u], pv = pos[e.v];
        if (pu > pv) std::swap(pu, pv);
        if (pv - pu != 1) {
          result.failing_event = static_cast<int>(k);
          break;
        }
        std::swap(order[pu - 1], order[pv - 1]);
        pos[order[pu - 1]] = pu;
        pos[order[pv - 1]] = pv;
      }
    }
    return result;
  }

  // Fragmented list (possible for cmsn inputs with parallel classes): try
  // every fragment arrangement up to a budget; any replay success wins.
  std::size_t combos = 1;
  constexpr std::size_t kBudget = 4096;
  for (std::size_t i = 0; i < fragments.size(); ++i) {
    combos *= 2 * (i + 1);
    if (combos > kBudget) {
      result.status = WiringResult::Status::indeterminate;
      return result;
    }
  }

  std::vector<std::size_t> index(fragments.size());
  for (std::size_t i = 0; i < index.size(); ++i) index[i] = i;
  std::sort(index.begin(), index.end());
  std::optional<WiringDiagram> best;
  do {
    for (std::size_t mask = 0; mask < (std::size_t{1} << fragments.size()); ++mask) {
      std::vector<int> sigma;
      sigma.reserve(n);
      for (std::size_t i = 0; i < index.size(); ++i) {
        std::vector<int> frag = fragments[index[i]];
        if (mask & (std::size_t{1} << i)) std::reverse(frag.begin(), frag.end());
        sigma.insert(sigma.end(), frag.begin(), frag.end());
      }
      auto diagram = replay_with_order(net, sigma);
      if (diagram && (!best || diagram->sigma < best->sigma)) best = diagram;
    }
  } while (std::next_permutation(index.begin(), index.end()));

  if (best) {
    result.status = WiringResult::Status::ok;
    result.diagram = std::move(best);
  } else {
    result.status = WiringResult::Status::non_realizable;
    result.failing_event = static_cast<int>(net.events.size());
  }
  return result;
}

}  // namespace msn
