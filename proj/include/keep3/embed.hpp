#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "keep3/graph.hpp"
#include "keep3/tree.hpp"

namespace keep3 {

inline constexpr long kDefaultBacktrackBudget = 100000;

// A partial or complete placement of a tree pattern inside a host graph.
struct Embedding {
  TreePattern pattern;
  std::vector<int> to_host;  // pattern vertex -> host vertex, -1 while unmapped

  explicit Embedding(TreePattern p)
      : pattern(std::move(p)), to_host(pattern.order(), -1) {}
  Embedding(TreePattern p, std::vector<int> map)
      : pattern(std::move(p)), to_host(std::move(map)) {}

  bool complete() const;
  int host_of(int pv) const { return to_host[pv]; }
  void map(int pv, int host);  // pv unmapped, host fresh
  std::vector<int> mapped_hosts() const;  // sorted
  EdgeSet image_edges() const;            // host edges under the placement
  bool verify(const Graph& host, std::string* why = nullptr) const;
};

// host edges that must stay untouched, keyed by the pattern vertex whose
// host they are incident to; neighbours of such vertices are placed first
using ReservedMap = std::map<int, EdgeSet>;

struct ExtendOutcome {
  std::optional<Embedding> embedding;
  int blocked_pattern_vertex = -1;  // a vertex that resisted placement
};

// completes a partial embedding without using forbidden or reserved edges
ExtendOutcome extend_embedding(const Graph& g, const Embedding& base,
                               const EdgeSet& forbidden, const ReservedMap& reserved = {},
                               long budget = kDefaultBacktrackBudget);

// places only the internal vertices of the pattern, hosts restricted to the
// allowed mask (empty mask admits every vertex)
std::optional<Embedding> greedy_embed_internal(const Graph& g, const TreePattern& t,
                                               const std::vector<char>& allowed_hosts = {},
                                               long budget = kDefaultBacktrackBudget);

std::optional<Embedding> embed_tree(const Graph& g, const TreePattern& t,
                                    const EdgeSet& forbidden = {},
                                    long budget = kDefaultBacktrackBudget);

}  // namespace keep3
