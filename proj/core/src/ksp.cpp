#include "urt/ksp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <unordered_set>

#include "urt/error.hpp"

namespace urt {

bool node_seq_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Label {
  double dist = kInf;
  std::vector<int> nodes;
  std::vector<int> arcs;
  bool valid() const { return dist < kInf; }
};

bool label_better(double dist, const std::vector<int>& nodes, const Label& cur) {
  if (!cur.valid()) return true;
  if (dist < cur.dist) return true;
  if (dist > cur.dist) return false;
  return node_seq_less(nodes, cur.nodes);
}

// Label-correcting shortest path over (node, incoming-class) states with
// lexicographic node-sequence tie-break. Node repetition is rejected during
// relaxation, so returned paths are simple. Class slot 0 is the virtual
// start state; incoming class c occupies slot c + 1.
class StateDijkstra {
 public:
  StateDijkstra(const SearchGraph& g, std::span<const double> cost)
      : g_(g), cost_(cost), slots_(SearchGraph::kMaxClasses + 1) {}

  // start_class < 0 means path start (allowed_start applies).
  Label run(int src, int dst, int start_class,
            const std::unordered_set<int>& banned_arcs,
            const std::vector<uint8_t>& banned_node,
            std::span<const uint8_t> forbidden_intermediate) {
    labels_.assign(static_cast<size_t>(g_.node_count) * slots_, Label{});
    std::priority_queue<std::pair<double, int>, std::vector<std::pair<double, int>>,
                        std::greater<>> queue;

    int start_slot = start_class < 0 ? 0 : start_class + 1;
    int s0 = src * slots_ + start_slot;
    labels_[static_cast<size_t>(s0)] = Label{0.0, {src}, {}};
    queue.emplace(0.0, s0);

    while (!queue.empty()) {
      auto [d, state] = queue.top();
      queue.pop();
      Label& cur = labels_[static_cast<size_t>(state)];
      if (!cur.valid() || d > cur.dist) continue;

      int node = state / slots_;
      int slot = state % slots_;
      uint16_t allowed = slot == 0 ? g_.allowed_start
                                   : g_.allowed_after[static_cast<size_t>(slot - 1)];
      if (node == dst) continue;

      for (const auto& arc : g_.out[static_cast<size_t>(node)]) {
        if (!(allowed & (uint16_t{1} << arc.cls))) continue;
        if (banned_arcs.count(arc.id)) continue;
        if (arc.to != dst && !forbidden_intermediate.empty() &&
            forbidden_intermediate[static_cast<size_t>(arc.to)]) {
          continue;
        }
        if (!banned_node.empty() && banned_node[static_cast<size_t>(arc.to)]) continue;
        if (std::find(cur.nodes.begin(), cur.nodes.end(), arc.to) != cur.nodes.end()) {
          continue;
        }
        double nd = cur.dist + cost_[static_cast<size_t>(arc.id)];
        int nstate = arc.to * slots_ + arc.cls + 1;
        Label& tgt = labels_[static_cast<size_t>(nstate)];
        std::vector<int> nnodes = cur.nodes;
        nnodes.push_back(arc.to);
        if (!label_better(nd, nnodes, tgt)) continue;
        tgt.dist = nd;
        tgt.nodes = std::move(nnodes);
        tgt.arcs = cur.arcs;
        tgt.arcs.push_back(arc.id);
        queue.emplace(nd, nstate);
      }
    }

    Label best;
    for (int c = 0; c < slots_; ++c) {
      const Label& l = labels_[static_cast<size_t>(dst * slots_ + c)];
      if (l.valid() && label_better(l.dist, l.nodes, best)) best = l;
    }
    return best;
  }

 private:
  const SearchGraph& g_;
  std::span<const double> cost_;
  int slots_;
  std::vector<Label> labels_;
};

double path_cost(const std::vector<int>& arcs, std::span<const double> cost) {
  double total = 0.0;
  for (int a : arcs) total += cost[static_cast<size_t>(a)];
  return total;
}

struct CandidateLess {
  bool operator()(const FoundPath& a, const FoundPath& b) const {
    if (a.cost != b.cost) return a.cost < b.cost;
    return node_seq_less(a.nodes, b.nodes);
  }
};

}  // namespace

std::vector<FoundPath> yen_k_shortest(const SearchGraph& g,
                                      std::span<const double> arc_cost,
                                      int src, int dst, int k,
                                      double detour_factor,
                                      std::span<const uint8_t> forbidden_intermediate) {
  if (src < 0 || src >= g.node_count || dst < 0 || dst >= g.node_count) {
    throw DataError("k_shortest: node out of range");
  }
  if (k <= 0) return {};
  for (int n = 0; n < g.node_count; ++n) {
    for (const auto& arc : g.out[static_cast<size_t>(n)]) {
      if (arc_cost[static_cast<size_t>(arc.id)] < 0.0) {
        throw DataError("k_shortest: negative arc cost");
      }
    }
  }

  StateDijkstra search(g, arc_cost);
  std::unordered_set<int> no_bans;
  std::vector<uint8_t> no_nodes;

  Label first = search.run(src, dst, -1, no_bans, no_nodes, forbidden_intermediate);
  if (!first.valid()) return {};

  std::vector<FoundPath> accepted;
  std::set<FoundPath, CandidateLess> candidates;
  std::set<std::vector<int>> seen;

  FoundPath p0{first.arcs, first.nodes, path_cost(first.arcs, arc_cost)};
  seen.insert(p0.nodes);
  candidates.insert(std::move(p0));

  // Arc class lookup for spur start states.
  std::map<int, uint8_t> arc_class;
  for (int n = 0; n < g.node_count; ++n) {
    for (const auto& arc : g.out[static_cast<size_t>(n)]) arc_class[arc.id] = arc.cls;
  }

  bool prune = std::isfinite(detour_factor) && detour_factor > 0.0;

  while (static_cast<int>(accepted.size()) < k && !candidates.empty()) {
    FoundPath next = *candidates.begin();
    candidates.erase(candidates.begin());

    if (prune && !accepted.empty() && next.cost > detour_factor * accepted[0].cost) {
      break;  // candidates are cost-sorted; everything after is worse
    }
    accepted.push_back(next);
    if (static_cast<int>(accepted.size()) == k) break;

    const auto& base_nodes = accepted.back().nodes;
    const auto& base_arcs = accepted.back().arcs;

    for (size_t i = 0; i + 1 < base_nodes.size(); ++i) {
      int spur_node = base_nodes[i];

      std::unordered_set<int> banned_arcs;
      for (const auto& q : accepted) {
        if (q.nodes.size() > i &&
            std::equal(base_nodes.begin(), base_nodes.begin() + static_cast<long>(i) + 1,
                       q.nodes.begin()) &&
            q.arcs.size() > i) {
          banned_arcs.insert(q.arcs[i]);
        }
      }
      std::vector<uint8_t> banned_node(static_cast<size_t>(g.node_count), 0);
      for (size_t j = 0; j < i; ++j) banned_node[static_cast<size_t>(base_nodes[j])] = 1;

      int start_class = i == 0 ? -1 : arc_class.at(base_arcs[i - 1]);
      Label spur = search.run(spur_node, dst, start_class, banned_arcs, banned_node,
                              forbidden_intermediate);
      if (spur.valid()) {
        FoundPath cand;
        cand.arcs.assign(base_arcs.begin(), base_arcs.begin() + static_cast<long>(i));
        cand.arcs.insert(cand.arcs.end(), spur.arcs.begin(), spur.arcs.end());
        cand.nodes.assign(base_nodes.begin(), base_nodes.begin() + static_cast<long>(i));
        cand.nodes.insert(cand.nodes.end(), spur.nodes.begin(), spur.nodes.end());
        cand.cost = path_cost(cand.arcs, arc_cost);
        if (seen.insert(cand.nodes).second) candidates.insert(std::move(cand));
      }
    }
  }

  return accepted;
}

}  // namespace urt
