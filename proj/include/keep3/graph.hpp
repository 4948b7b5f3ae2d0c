#pragma once

// Simple undirected graphs on dense vertex ids 0..n-1, immutable after
// construction, plus graph6 and edge-list text formats.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace keep3 {

// Unordered pair of distinct vertices, stored with u < v.
struct Edge {
  int u = 0;
  int v = 1;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw std::invalid_argument("Edge: self-loop at " + std::to_string(a));
  }
  auto operator<=>(const Edge&) const = default;
};

class Graph;

// Sorted, duplicate-free set of edges.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<Edge> es) : edges_(es) { normalize(); }
  explicit EdgeSet(std::vector<Edge> es) : edges_(std::move(es)) { normalize(); }
  static EdgeSet of_graph(const Graph& g);

  bool contains(const Edge& e) const;
  bool contains(int u, int v) const { return u != v && contains(Edge(u, v)); }
  void insert(const Edge& e);
  EdgeSet merged(const EdgeSet& other) const;

  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  auto begin() const { return edges_.begin(); }
  auto end() const { return edges_.end(); }

 private:
  std::vector<Edge> edges_;
  void normalize();
};

class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);
  static Graph complete(int n);

  int order() const { return n_; }
  int size() const { return m_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return bit(u, v);
  }
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<Edge> edges() const;
  EdgeSet edge_set() const { return EdgeSet(edges()); }

  // Calls f(w) for each neighbor w of v in increasing order.
  template <class F>
  void for_each_neighbor(int v, F&& f) const {
    check_vertex(v);
    const std::uint64_t* row = bits_.data() + static_cast<std::size_t>(v) * words_;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t word = row[w];
      while (word) {
        int b = std::countr_zero(word);
        f(w * 64 + b);
        word &= word - 1;
      }
    }
  }

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;

  bool bit(int u, int v) const {
    return bits_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64) & 1;
  }
  void set_edge(int u, int v);
  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," +
                                  std::to_string(n_) + ")");
  }

  friend Graph parse_graph6(std::string_view);
};

int min_degree(const Graph& g);  // throws on the empty graph

Graph remove_edges(const Graph& g, const EdgeSet& gone);  // every edge must be present
Graph add_edges(const Graph& g, const EdgeSet& extra);    // every edge must be absent
Graph induced_subgraph(const Graph& g, std::span<const int> keep);  // relabels by rank in keep

struct Graph6Error : std::runtime_error {
  std::size_t offset;  // byte position in the word
  Graph6Error(const std::string& what, std::size_t off)
      : std::runtime_error(what + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

Graph parse_graph6(std::string_view word);
std::string encode_graph6(const Graph& g);

struct EdgeListError : std::runtime_error {
  std::size_t line;  // 1-based
  EdgeListError(const std::string& what, std::size_t ln)
      : std::runtime_error(what + " (line " + std::to_string(ln) + ")"), line(ln) {}
};

// "n m" header, then m lines "u v". Blank lines and lines starting with '#' skipped.
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

}  // namespace keep3
