#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "keep3/connectivity.hpp"
#include "keep3/graph.hpp"

namespace keep3 {

// A maximal segment between two branch vertices, endpoints included.
struct Ear {
  std::vector<int> vertices;
  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }
  int interior_size() const { return static_cast<int>(vertices.size()) - 2; }
  bool contains(int v) const;
};

// Lexicographic progress measure: more branch vertices, then fewer vertices
// overall. Every growth move must strictly increase it.
struct Potential {
  int branch_count = 0;
  int neg_order = 0;
  auto operator<=>(const Potential&) const = default;
};

// A subdivision of a simple 3-connected graph sitting inside a host graph:
// branch vertices carry degree >= 3, every edge lies on exactly one ear, and
// suppressing the degree-2 vertices leaves a simple 3-connected graph.
class Skeleton {
 public:
  static std::optional<Skeleton> build(int host_order, std::vector<int> vertices,
                                       std::vector<Edge> edges, std::string* diag = nullptr);

  int host_order() const { return host_order_; }
  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<int>& branch_vertices() const { return branch_; }
  const std::vector<int>& subdivision_vertices() const { return subdiv_; }
  const std::vector<Ear>& ears() const { return ears_; }
  const EdgeSet& edge_set() const { return edges_; }

  bool has_vertex(int v) const;
  int degree(int v) const;
  const Ear& closed_ear_of(int v) const;  // only for degree-2 vertices
  Potential potential() const {
    return {static_cast<int>(branch_.size()), -static_cast<int>(vertices_.size())};
  }

 private:
  Skeleton() = default;
  int host_order_ = 0;
  std::vector<int> vertices_, branch_, subdiv_;
  std::vector<Ear> ears_;
  std::vector<int> ear_of_;  // degree-2 host vertex -> index into ears_
  EdgeSet edges_;
  std::vector<std::vector<int>> adj_;
};

// Hooks a fresh vertex onto at least three attachment points that do not all
// share one closed ear. Grows the branch count.
std::optional<Skeleton> attach_vertex_move(const Skeleton& b, int w,
                                           const std::vector<int>& attach,
                                           std::string* diag = nullptr);

// Replaces the ear segment strictly between positions p and q with the fresh
// vertex w. Needs q - p >= 3 so the vertex count drops.
std::optional<Skeleton> shortcut_ear_move(const Skeleton& b, int w, int ear_index, int p,
                                          int q, std::string* diag = nullptr);

// Adds a three-path fan from an outside centre to three distinct vertices of
// the subdivision, interiors outside.
std::optional<Skeleton> attach_fan_move(const Skeleton& b, const Fan& fan,
                                        std::string* diag = nullptr);

// Adds a path from a degree-2 vertex to a subdivision vertex off its own
// closed ear, interior outside.
std::optional<Skeleton> attach_path_move(const Skeleton& b, const std::vector<int>& path,
                                         std::string* diag = nullptr);

// True when the graph keeps a nonempty core under the reduction rules
// (drop degree <= 1, suppress degree 2), which happens exactly when it
// contains a K4 subdivision.
bool contains_k4_subdivision(const Graph& g);

// An edge-minimal K4 subdivision inside the host, if one exists.
std::optional<Skeleton> initial_skeleton(const Graph& h);

}  // namespace keep3
