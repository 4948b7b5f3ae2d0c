#pragma once

// Exact connectivity predicates and disjoint path systems, all flow based.

#include <optional>
#include <vector>

#include "keep3/graph.hpp"

namespace keep3 {

enum class Mode { vertex, edge };

inline const char* mode_name(Mode m) { return m == Mode::vertex ? "vertex" : "edge"; }

bool vertex_connectivity_at_least(const Graph& g, int k);
bool edge_connectivity_at_least(const Graph& g, int k);
bool connectivity_at_least(const Graph& g, int k, Mode mode);

// A set U with |U| < k whose removal disconnects g or leaves at most one
// vertex, if any exists. Complements vertex_connectivity_at_least exactly.
std::optional<std::vector<int>> find_vertex_cut_below(const Graph& g, int k);

// k paths from center to distinct targets, pairwise sharing only the center,
// interior vertices outside the target set. Each path is listed center first.
struct Fan {
  int center = -1;
  std::vector<std::vector<int>> paths;
  int total_order() const {
    int t = 0;
    for (const auto& p : paths) t += static_cast<int>(p.size());
    return t;
  }
};

struct FanSearch {
  std::optional<Fan> fan;
  // When no fan exists: fewer than k vertices meeting every center-target path.
  std::vector<int> separator;
};

// Minimizes the summed path orders; among minimum fans picks the one whose
// sorted endpoint list is lexicographically least.
FanSearch min_fan(const Graph& g, int center, const std::vector<int>& targets, int k);

// k internally disjoint s-t paths if they exist, each listed s..t.
std::optional<std::vector<std::vector<int>>> disjoint_vertex_paths(const Graph& g, int s,
                                                                   int t, int k);

}  // namespace keep3
