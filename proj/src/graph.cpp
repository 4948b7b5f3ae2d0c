#include "keep3/graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace keep3 {

void EdgeSet::normalize() {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool EdgeSet::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

void EdgeSet::insert(const Edge& e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) edges_.insert(it, e);
}

EdgeSet EdgeSet::merged(const EdgeSet& other) const {
  std::vector<Edge> all = edges_;
  all.insert(all.end(), other.edges_.begin(), other.edges_.end());
  return EdgeSet(std::move(all));
}

EdgeSet EdgeSet::of_graph(const Graph& g) { return g.edge_set(); }

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw std::invalid_argument("Graph: negative order");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::set_edge(int u, int v) {
  bits_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  bits_[static_cast<std::size_t>(v) * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (!bit(e.u, e.v)) {
      set_edge(e.u, e.v);
      ++m_;
    }
  }
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.set_edge(u, v);
  g.m_ = n * (n - 1) / 2;
  return g;
}

int Graph::degree(int v) const {
  check_vertex(v);
  int d = 0;
  const std::uint64_t* row = bits_.data() + static_cast<std::size_t>(v) * words_;
  for (int w = 0; w < words_; ++w) d += std::popcount(row[w]);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for_each_neighbor(v, [&](int w) { out.push_back(w); });
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for_each_neighbor(u, [&](int w) {
      if (w > u) out.emplace_back(u, w);
    });
  return out;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("min_degree: empty graph");
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

Graph remove_edges(const Graph& g, const EdgeSet& gone) {
  for (const Edge& e : gone)
    if (!g.adjacent(e.u, e.v))
      throw std::invalid_argument("remove_edges: " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v) + " is not an edge");
  std::vector<Edge> kept;
  kept.reserve(g.size());
  for (const Edge& e : g.edges())
    if (!gone.contains(e)) kept.push_back(e);
  return Graph(g.order(), kept);
}

Graph add_edges(const Graph& g, const EdgeSet& extra) {
  std::vector<Edge> all = g.edges();
  for (const Edge& e : extra) {
    if (g.adjacent(e.u, e.v))
      throw std::invalid_argument("add_edges: " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v) + " already present");
    all.push_back(e);
  }
  return Graph(g.order(), all);
}

Graph induced_subgraph(const Graph& g, std::span<const int> keep) {
  std::vector<int> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("induced_subgraph: duplicate vertex in selection");
  std::vector<int> rank(g.order(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] < 0 || sorted[i] >= g.order())
      throw std::invalid_argument("induced_subgraph: unknown vertex " +
                                  std::to_string(sorted[i]));
    rank[sorted[i]] = static_cast<int>(i);
  }
  std::vector<Edge> es;
  for (int u : sorted)
    g.for_each_neighbor(u, [&](int w) {
      if (w > u && rank[w] >= 0) es.emplace_back(rank[u], rank[w]);
    });
  return Graph(static_cast<int>(sorted.size()), es);
}

// graph6: header byte 63+n (n <= 62), then the upper triangle x(0,1), x(0,2),
// x(1,2), x(0,3), ... packed 6 bits per byte, high bit first, zero padded.

Graph parse_graph6(std::string_view word) {
  if (word.empty()) throw Graph6Error("empty graph6 word", 0);
  for (std::size_t i = 0; i < word.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(word[i]);
    if (c < 63 || c > 126) throw Graph6Error("character outside printable range 63..126", i);
  }
  if (static_cast<unsigned char>(word[0]) == 126)
    throw Graph6Error("orders above 62 not supported", 0);
  int n = word[0] - 63;
  long pair_bits = static_cast<long>(n) * (n - 1) / 2;
  std::size_t need = static_cast<std::size_t>((pair_bits + 5) / 6);
  if (word.size() != 1 + need)
    throw Graph6Error("payload length mismatch: order " + std::to_string(n) + " needs " +
                          std::to_string(need) + " payload bytes, got " +
                          std::to_string(word.size() - 1),
                      std::min(word.size(), need + 1));

  Graph g(n);
  long b = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++b) {
      int c = word[1 + b / 6] - 63;
      if (c >> (5 - b % 6) & 1) {
        g.set_edge(i, j);
        ++g.m_;
      }
    }
  for (; b < static_cast<long>(need) * 6; ++b) {
    int c = word[1 + b / 6] - 63;
    if (c >> (5 - b % 6) & 1) throw Graph6Error("nonzero padding bit", 1 + b / 6);
  }
  return g;
}

std::string encode_graph6(const Graph& g) {
  int n = g.order();
  if (n > 62) throw std::invalid_argument("encode_graph6: orders above 62 not supported");
  std::string out;
  out.push_back(static_cast<char>(63 + n));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = acc << 1 | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  long n = -1, m = -1;
  std::vector<Edge> es;
  long seen = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long a, b;
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra))
      throw EdgeListError("expected two integers", lineno);
    if (n < 0) {
      n = a;
      m = b;
      if (n < 0 || m < 0 || n > 1000000)
        throw EdgeListError("implausible header", lineno);
      continue;
    }
    if (seen == m) throw EdgeListError("more edges than the header announced", lineno);
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw EdgeListError("vertex out of range", lineno);
    if (a == b) throw EdgeListError("self-loop", lineno);
    Edge e(static_cast<int>(a), static_cast<int>(b));
    if (std::find(es.begin(), es.end(), e) != es.end())
      throw EdgeListError("duplicate edge", lineno);
    es.push_back(e);
    ++seen;
  }
  if (n < 0) throw EdgeListError("missing header", lineno);
  if (seen != m)
    throw EdgeListError("header announced " + std::to_string(m) + " edges, found " +
                            std::to_string(seen),
                        lineno);
  return Graph(static_cast<int>(n), es);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace keep3
