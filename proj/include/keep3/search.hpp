#pragma once

#include <climits>
#include <optional>
#include <string>
#include <vector>

#include "keep3/connectivity.hpp"
#include "keep3/embed.hpp"
#include "keep3/graph.hpp"
#include "keep3/skeleton.hpp"
#include "keep3/tree.hpp"

namespace keep3 {

struct MoveRecord {
  std::string kind;    // attach | shortcut | fan | path | star-recenter | reembed | star-close
  std::string detail;
  Potential after;     // skeleton potential once the move is applied
  bool grew = false;   // true for the moves that must raise the potential
};

struct SearchOptions {
  Mode mode = Mode::vertex;
  long move_budget = -1;  // < 0 picks host order squared
  long backtrack_budget = kDefaultBacktrackBudget;
};

struct SearchState {
  Graph host;
  TreePattern pattern;
  SearchOptions options;
  Embedding tree;  // complete placement, edges disjoint from the skeleton
  Skeleton skeleton;
  std::vector<MoveRecord> trace;
};

struct FailureDiagnostic {
  std::string reason;
  std::string bundle;  // self-contained text snapshot for replay
};

struct FindResult {
  std::optional<Embedding> tree;
  std::optional<FailureDiagnostic> failure;
  std::vector<std::string> warnings;
  std::vector<MoveRecord> trace;
  bool ok() const { return tree.has_value(); }
};

// A vertex outside the subdivision holding four usable edges into it, with
// the move classification: spread over several ears, or bunched on one.
struct Claim1Hit {
  int w = -1;
  std::vector<int> attach;  // its working-graph neighbours inside the subdivision
  bool on_one_ear = false;
  int ear_index = -1;
  int p = -1, q = -1;  // 0-based min and max positions along that ear
};

// scans the working graph (host minus current tree edges) in vertex order
std::optional<Claim1Hit> claim1_scan(const Graph& working, const Skeleton& b);

// re-embeds the tree with its internal vertices outside the subdivision and
// `count` designated edges from x into the subdivision left untouched
std::optional<Embedding> free_edges_reembed(const Graph& g, const TreePattern& t,
                                            const Skeleton& b, int x, int count = 4,
                                            long budget = kDefaultBacktrackBudget);

struct StarCase {
  Embedding embedding;
  bool closing = false;  // the subdivision plus x spans the host
};

// re-centres a star tree away from x, or at x itself when nothing else is left
std::optional<StarCase> star_case(const Graph& g, const TreePattern& t, const Skeleton& b,
                                  int x);

// minimum-order path from a degree-2 vertex to a subdivision vertex off its
// own closed ear, interior outside the subdivision; searched in `graph`
// (pass the working graph). Throws std::invalid_argument without degree-2
// vertices. Paths with more than max_order vertices are ignored.
std::optional<std::vector<int>> bridging_path_search(const Graph& graph, const Skeleton& b,
                                                     int max_order = INT_MAX);

FindResult find_removable_tree(const Graph& g, const TreePattern& t,
                               const SearchOptions& options = {});
FindResult resume_search(SearchState state);

/// the soundness gate: shape, placement, and leftover connectivity
bool verify_removal(const Graph& g, const TreePattern& t, const Embedding& emb, Mode mode,
                    std::string* why = nullptr);

}  // namespace keep3
