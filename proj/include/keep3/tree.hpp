#pragma once

#include <span>
#include <string>
#include <vector>

#include "keep3/graph.hpp"

namespace keep3 {

// A tree on labels 0..m-1. Wraps a Graph that is checked to be connected
// and acyclic on construction.
class TreePattern {
 public:
  static TreePattern from_edges(int m, std::span<const Edge> edges);
  static TreePattern from_edges(int m, std::initializer_list<Edge> edges);
  // parents[i] is the neighbour of vertex i+1 on its path to the root 0
  static TreePattern from_parent_array(std::span<const int> parents);
  static TreePattern from_prufer(int m, std::span<const int> seq);
  // text form "m p1 p2 ... p_{m-1}", whitespace separated
  static TreePattern parse(const std::string& text);

  static TreePattern path(int m);
  static TreePattern star(int m);

  int order() const { return g_.order(); }
  const Graph& graph() const { return g_; }
  int degree(int v) const { return g_.degree(v); }
  std::vector<int> neighbors(int v) const { return g_.neighbors(v); }
  std::vector<Edge> edges() const { return g_.edges(); }

  std::vector<int> leaves() const;     // degree <= 1, so {0} when m == 1
  std::vector<int> internals() const;  // degree >= 2
  int max_degree() const;
  bool is_star() const;  // at most one vertex of degree >= 2

  std::vector<int> to_parent_array() const;
  std::string format() const;
  std::vector<int> prufer_sequence() const;

  std::vector<int> centroids() const;  // one or two, adjacent when two
  std::string ahu_canonical() const;   // equal exactly for isomorphic trees

  bool operator==(const TreePattern& other) const = default;

 private:
  explicit TreePattern(Graph g) : g_(std::move(g)) {}
  Graph g_;
};

// all trees of the given order up to isomorphism, sorted by canonical form
std::vector<TreePattern> enumerate_trees(int m);

}  // namespace keep3
