#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace urt {

/// Directed graph for loopless k-shortest-path search. Each arc carries a
/// small class label; `allowed_after` restricts which class may follow which,
/// so trip grammars (entry -> board -> vehicle -> ...) can be encoded
/// directly in the search instead of filtered afterwards.
struct SearchGraph {
  struct Arc {
    int to = 0;
    int id = 0;          // caller-side arc identifier (e.g. link_id)
    uint8_t cls = 0;
  };

  static constexpr int kMaxClasses = 8;

  int node_count = 0;
  std::vector<std::vector<Arc>> out;

  /// Bit i of allowed_start: arcs of class i may start a path.
  uint16_t allowed_start = 0xffff;
  /// Bit j of allowed_after[i]: class j may follow class i.
  std::array<uint16_t, kMaxClasses> allowed_after{};

  SearchGraph() { allowed_after.fill(0xffff); }
  explicit SearchGraph(int nodes) : SearchGraph() {
    node_count = nodes;
    out.resize(static_cast<size_t>(nodes));
  }

  void add_arc(int from, int to, int id, uint8_t cls = 0) {
    out[static_cast<size_t>(from)].push_back(Arc{to, id, cls});
  }
};

struct FoundPath {
  std::vector<int> arcs;   // arc ids in traversal order
  std::vector<int> nodes;  // node sequence, size arcs+1
  double cost = 0.0;
};

/// Lexicographic order on node sequences; the deterministic tie-break for
/// equal-cost paths.
bool node_seq_less(const std::vector<int>& a, const std::vector<int>& b);

/// Yen's algorithm. Paths are loopless (no repeated node), respect the class
/// grammar, and never pass through a node marked in `forbidden_intermediate`
/// except as source or destination. Results are sorted by (cost, node
/// sequence); paths costing more than detour_factor * shortest cost are
/// pruned. Returns fewer than k paths when the graph runs out.
std::vector<FoundPath> yen_k_shortest(const SearchGraph& g,
                                      std::span<const double> arc_cost,
                                      int src, int dst, int k,
                                      double detour_factor,
                                      std::span<const uint8_t> forbidden_intermediate = {});

}  // namespace urt
