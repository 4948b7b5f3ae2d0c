#include "keep3/tree.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace keep3 {

TreePattern TreePattern::from_edges(int m, std::span<const Edge> edges) {
  if (m < 1) throw std::invalid_argument("tree: order must be positive");
  if (static_cast<int>(edges.size()) != m - 1)
    throw std::invalid_argument("tree: order " + std::to_string(m) + " needs " +
                                std::to_string(m - 1) + " edges, got " +
                                std::to_string(edges.size()));
  Graph g(m, edges);
  std::vector<char> seen(m, 0);
  std::vector<int> q{0};
  seen[0] = 1;
  int cnt = 1;
  for (std::size_t i = 0; i < q.size(); ++i)
    g.for_each_neighbor(q[i], [&](int w) {
      if (!seen[w]) {
        seen[w] = 1;
        ++cnt;
        q.push_back(w);
      }
    });
  if (cnt != m) throw std::invalid_argument("tree: edges do not connect all vertices");
  return TreePattern(std::move(g));
}

TreePattern TreePattern::from_edges(int m, std::initializer_list<Edge> edges) {
  return from_edges(m, std::span<const Edge>(edges.begin(), edges.size()));
}

TreePattern TreePattern::from_parent_array(std::span<const int> parents) {
  int m = static_cast<int>(parents.size()) + 1;
  std::vector<Edge> edges;
  for (int i = 1; i < m; ++i) {
    int p = parents[i - 1];
    if (p < 0 || p >= m)
      throw std::invalid_argument("tree: parent " + std::to_string(p) + " of vertex " +
                                  std::to_string(i) + " out of range");
    if (p == i)
      throw std::invalid_argument("tree: vertex " + std::to_string(i) + " is its own parent");
    edges.push_back(Edge{i, p});
  }
  return from_edges(m, edges);
}

TreePattern TreePattern::parse(const std::string& text) {
  std::istringstream in(text);
  int m = 0;
  if (!(in >> m)) throw std::invalid_argument("tree: missing order");
  if (m < 1) throw std::invalid_argument("tree: order must be positive");
  std::vector<int> parents;
  int p = 0;
  while (in >> p) parents.push_back(p);
  std::string rest;
  if (in.clear(), in >> rest) throw std::invalid_argument("tree: trailing junk '" + rest + "'");
  if (static_cast<int>(parents.size()) != m - 1)
    throw std::invalid_argument("tree: order " + std::to_string(m) + " needs " +
                                std::to_string(m - 1) + " parent entries, got " +
                                std::to_string(parents.size()));
  return from_parent_array(parents);
}

TreePattern TreePattern::path(int m) {
  std::vector<Edge> edges;
  for (int i = 1; i < m; ++i) edges.push_back(Edge{i - 1, i});
  return from_edges(m, edges);
}

TreePattern TreePattern::star(int m) {
  std::vector<Edge> edges;
  for (int i = 1; i < m; ++i) edges.push_back(Edge{0, i});
  return from_edges(m, edges);
}

std::vector<int> TreePattern::leaves() const {
  std::vector<int> out;
  for (int v = 0; v < order(); ++v)
    if (degree(v) <= 1) out.push_back(v);
  return out;
}

std::vector<int> TreePattern::internals() const {
  std::vector<int> out;
  for (int v = 0; v < order(); ++v)
    if (degree(v) >= 2) out.push_back(v);
  return out;
}

int TreePattern::max_degree() const {
  int best = 0;
  for (int v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

bool TreePattern::is_star() const { return static_cast<int>(internals().size()) <= 1; }

std::vector<int> TreePattern::to_parent_array() const {
  std::vector<int> parent(order(), -1);
  std::vector<int> q{0};
  std::vector<char> seen(order(), 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < q.size(); ++i)
    g_.for_each_neighbor(q[i], [&](int w) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = q[i];
        q.push_back(w);
      }
    });
  return std::vector<int>(parent.begin() + 1, parent.end());
}

std::string TreePattern::format() const {
  std::ostringstream out;
  out << order();
  for (int p : to_parent_array()) out << ' ' << p;
  return out.str();
}

std::vector<int> TreePattern::prufer_sequence() const {
  int m = order();
  std::vector<int> deg(m), seq;
  std::set<int> leaf_pool;
  std::vector<std::set<int>> adj(m);
  for (const Edge& e : edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  for (int v = 0; v < m; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] == 1) leaf_pool.insert(v);
  }
  for (int step = 0; step + 2 < m; ++step) {
    int leaf = *leaf_pool.begin();
    leaf_pool.erase(leaf_pool.begin());
    int nb = *adj[leaf].begin();
    seq.push_back(nb);
    adj[nb].erase(leaf);
    adj[leaf].clear();
    if (static_cast<int>(adj[nb].size()) == 1) leaf_pool.insert(nb);
  }
  return seq;
}

TreePattern TreePattern::from_prufer(int m, std::span<const int> seq) {
  if (m < 1) throw std::invalid_argument("tree: order must be positive");
  if (static_cast<int>(seq.size()) != std::max(0, m - 2))
    throw std::invalid_argument("tree: sequence length must be order minus two");
  if (m == 1) return from_edges(1, std::span<const Edge>{});
  std::vector<int> deg(m, 1);
  for (int v : seq) {
    if (v < 0 || v >= m) throw std::invalid_argument("tree: sequence entry out of range");
    ++deg[v];
  }
  std::set<int> leaf_pool;
  for (int v = 0; v < m; ++v)
    if (deg[v] == 1) leaf_pool.insert(v);
  std::vector<Edge> edges;
  for (int v : seq) {
    int leaf = *leaf_pool.begin();
    leaf_pool.erase(leaf_pool.begin());
    edges.push_back(Edge{leaf, v});
    if (--deg[v] == 1) leaf_pool.insert(v);
  }
  assert(leaf_pool.size() == 2);
  int a = *leaf_pool.begin(), b = *leaf_pool.rbegin();
  edges.push_back(Edge{a, b});
  return from_edges(m, edges);
}

std::vector<int> TreePattern::centroids() const {
  int m = order();
  std::vector<int> size(m, 1), order_visit, parent(m, -1);
  std::vector<char> seen(m, 0);
  order_visit.push_back(0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order_visit.size(); ++i)
    g_.for_each_neighbor(order_visit[i], [&](int w) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = order_visit[i];
        order_visit.push_back(w);
      }
    });
  for (auto it = order_visit.rbegin(); it != order_visit.rend(); ++it)
    if (parent[*it] >= 0) size[parent[*it]] += size[*it];
  std::vector<int> out;
  int best = m + 1;
  for (int v = 0; v < m; ++v) {
    int heavy = m - size[v];
    g_.for_each_neighbor(v, [&](int w) {
      if (parent[w] == v) heavy = std::max(heavy, size[w]);
    });
    if (heavy < best) {
      best = heavy;
      out.clear();
    }
    if (heavy == best) out.push_back(v);
  }
  assert(out.size() == 1 || out.size() == 2);
  return out;
}

namespace {

std::string rooted_label(const Graph& g, int v, int from) {
  std::vector<std::string> kids;
  g.for_each_neighbor(v, [&](int w) {
    if (w != from) kids.push_back(rooted_label(g, w, v));
  });
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const std::string& k : kids) out += k;
  out += ")";
  return out;
}

}  // namespace

std::string TreePattern::ahu_canonical() const {
  std::string best;
  for (int c : centroids()) {
    std::string s = rooted_label(g_, c, -1);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

std::vector<TreePattern> enumerate_trees(int m) {
  if (m < 1) throw std::invalid_argument("tree enumeration: order must be positive");
  std::vector<std::vector<Edge>> level = {{}};  // edge lists of order-k trees
  for (int k = 1; k < m; ++k) {
    std::map<std::string, std::vector<Edge>> next;
    for (const std::vector<Edge>& edges : level)
      for (int v = 0; v < k; ++v) {
        std::vector<Edge> grown = edges;
        grown.push_back(Edge{v, k});
        TreePattern t = TreePattern::from_edges(k + 1, grown);
        next.emplace(t.ahu_canonical(), std::move(grown));
      }
    level.clear();
    for (auto& [key, edges] : next) level.push_back(std::move(edges));
  }
  std::vector<TreePattern> out;
  for (const std::vector<Edge>& edges : level)
    out.push_back(TreePattern::from_edges(m, edges));
  std::sort(out.begin(), out.end(), [](const TreePattern& a, const TreePattern& b) {
    return a.ahu_canonical() < b.ahu_canonical();
  });
  return out;
}

}  // namespace keep3
