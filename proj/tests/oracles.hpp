#pragma once

// Independent brute-force reference implementations the tests compare the
// library against. Everything here favors the obvious definition over speed
// and shares no code paths with the library internals it checks.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "keep3/graph.hpp"
#include "keep3/randgraph.hpp"
#include "keep3/tree.hpp"

namespace oracles {

using keep3::Edge;
using keep3::Graph;
using keep3::TreePattern;

inline bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    g.for_each_neighbor(v, [&](int w) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    });
  }
  return reached == n;
}

// kappa(g) >= k by enumerating every vertex set of size < k: none may
// disconnect the graph or leave at most one vertex.
inline bool brute_vertex_connectivity_at_least(const Graph& g, int k) {
  if (k <= 0) return true;
  const int n = g.order();
  std::vector<int> pick;
  auto bad = [&](auto&& self, int next) -> bool {
    std::vector<int> keep;
    std::vector<char> gone(n, 0);
    for (int v : pick) gone[v] = 1;
    for (int v = 0; v < n; ++v)
      if (!gone[v]) keep.push_back(v);
    if (keep.size() <= 1) return true;
    if (!is_connected(induced_subgraph(g, keep))) return true;
    if (static_cast<int>(pick.size()) == k - 1) return false;
    for (int v = next; v < n; ++v) {
      pick.push_back(v);
      if (self(self, v + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return !bad(bad, 0);
}

// kappa'(g) >= k by enumerating every edge set of size < k.
inline bool brute_edge_connectivity_at_least(const Graph& g, int k) {
  if (k <= 0) return true;
  if (g.order() <= 1) return true;
  const std::vector<Edge> all = g.edges();
  std::vector<Edge> pick;
  auto bad = [&](auto&& self, std::size_t next) -> bool {
    if (!is_connected(remove_edges(g, keep3::EdgeSet(pick)))) return true;
    if (static_cast<int>(pick.size()) == k - 1) return false;
    for (std::size_t i = next; i < all.size(); ++i) {
      pick.push_back(all[i]);
      if (self(self, i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return !bad(bad, 0);
}

// Minimum total vertex count over all systems of k paths from center to k
// distinct targets, pairwise sharing only the center, interior vertices
// avoiding every target. -1 when no such system exists.
inline int exhaustive_min_fan_total(const Graph& g, int center,
                                    const std::vector<int>& targets, int k) {
  const int n = g.order();
  std::vector<char> is_target(n, 0);
  for (int t : targets) is_target[t] = 1;
  int best = -1;
  std::vector<char> used(n, 0);  // interiors and endpoints of committed paths
  used[center] = 1;
  std::vector<int> chosen;

  // Depth-first over targets in index order; for each, enumerate paths.
  auto place = [&](auto&& self, std::size_t idx, int total) -> void {
    if (best >= 0 && total >= best) return;
    if (static_cast<int>(chosen.size()) == k) {
      best = best < 0 ? total : std::min(best, total);
      return;
    }
    for (std::size_t ti = idx; ti < targets.size(); ++ti) {
      const int t = targets[ti];
      if (used[t]) continue;
      // Enumerate simple paths center -> t, interiors unused and non-target.
      auto walk = [&](auto&& walker, int v, int len) -> void {
        if (best >= 0 && total + len + 1 >= best) return;
        if (g.adjacent(v, t)) {
          used[t] = 1;
          chosen.push_back(t);
          self(self, ti + 1, total + len + 1);
          chosen.pop_back();
          used[t] = 0;
        }
        for (int w = 0; w < n; ++w) {
          if (used[w] || is_target[w] || !g.adjacent(v, w)) continue;
          used[w] = 1;
          walker(walker, w, len + 1);
          used[w] = 0;
        }
      };
      walk(walk, center, 1);
    }
  };
  place(place, 0, 0);
  return best;
}

// Embedding count with a deliberately different traversal: pattern vertices
// in descending id order, hosts descending, adjacency checked against every
// already-placed pattern neighbor.
inline long long count_embeddings_reversed(const Graph& g, const TreePattern& t) {
  const int m = t.order();
  const int n = g.order();
  if (m > n) return 0;
  std::vector<int> to_host(m, -1);
  std::vector<char> used(n, 0);
  long long count = 0;
  auto place = [&](auto&& self, int pv) -> void {
    if (pv < 0) {
      ++count;
      return;
    }
    for (int h = n - 1; h >= 0; --h) {
      if (used[h]) continue;
      bool ok = true;
      for (int q : t.neighbors(pv))
        if (to_host[q] >= 0 && !g.adjacent(h, to_host[q])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      to_host[pv] = h;
      used[h] = 1;
      self(self, pv - 1);
      used[h] = 0;
      to_host[pv] = -1;
    }
  };
  place(place, m - 1);
  return count;
}

// Distinct tree shapes of order m as canonical strings, generated from every
// Prufer sequence rather than by the library's leaf-growing enumeration.
inline std::set<std::string> prufer_tree_shapes(int m) {
  std::set<std::string> shapes;
  if (m == 1 || m == 2) {
    shapes.insert(TreePattern::path(m).ahu_canonical());
    return shapes;
  }
  std::vector<int> seq(m - 2, 0);
  for (;;) {
    shapes.insert(TreePattern::from_prufer(m, seq).ahu_canonical());
    int i = m - 3;
    while (i >= 0 && seq[i] == m - 1) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  return shapes;
}

// K4-minor test by brute force: assign each vertex to one of four bags or to
// none; the four bags must be nonempty, connected, and pairwise joined by an
// edge. For graphs this small a K4 minor exists exactly when a K4
// subdivision does (the pattern has maximum degree 3).
inline bool brute_k4_subdivision(const Graph& g) {
  const int n = g.order();
  if (n < 4) return false;
  std::vector<int> bag(n, -1);
  auto bag_connected = [&](int which) {
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (bag[v] == which) members.push_back(v);
    if (members.empty()) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{members[0]};
    seen[members[0]] = 1;
    int reached = 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      g.for_each_neighbor(v, [&](int w) {
        if (bag[w] == which && !seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      });
    }
    return reached == static_cast<int>(members.size());
  };
  auto bags_joined = [&](int a, int b) {
    for (int v = 0; v < n; ++v) {
      if (bag[v] != a) continue;
      bool hit = false;
      g.for_each_neighbor(v, [&](int w) { hit = hit || bag[w] == b; });
      if (hit) return true;
    }
    return false;
  };
  auto assign = [&](auto&& self, int v) -> bool {
    if (v == n) {
      for (int which = 0; which < 4; ++which)
        if (!bag_connected(which)) return false;
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
          if (!bags_joined(a, b)) return false;
      return true;
    }
    for (int which = -1; which < 4; ++which) {
      bag[v] = which;
      if (self(self, v + 1)) return true;
    }
    bag[v] = -1;
    return false;
  };
  return assign(assign, 0);
}

// Definition-level skeleton check: the subgraph (vertices, edges) of host
// must be connected with every degree >= 2; walking its degree->=3 chains
// must consume every degree-2 vertex and yield a loopless multigraph without
// parallel chains that is 3-connected (checked by subset enumeration).
inline bool brute_valid_skeleton(const Graph& host, const std::vector<int>& vertices,
                                 const std::vector<Edge>& edges) {
  std::set<int> vs(vertices.begin(), vertices.end());
  if (vs.size() < 4) return false;
  std::set<Edge> es(edges.begin(), edges.end());
  for (const Edge& e : es)
    if (!vs.count(e.u) || !vs.count(e.v) || e.u < 0 || e.v >= host.order() ||
        !host.adjacent(e.u, e.v))
      return false;
  std::map<int, std::vector<int>> adj;
  for (int v : vs) adj[v];
  for (const Edge& e : es) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (const auto& [v, nb] : adj)
    if (nb.size() < 2) return false;
  // Connectivity of the subgraph.
  {
    std::set<int> seen{*vs.begin()};
    std::vector<int> stack{*vs.begin()};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen.count(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
    }
    if (seen.size() != vs.size()) return false;
  }
  std::vector<int> branch;
  for (const auto& [v, nb] : adj)
    if (nb.size() >= 3) branch.push_back(v);
  if (branch.size() < 4) return false;
  std::set<int> is_branch(branch.begin(), branch.end());
  // Walk every chain leaving every branch vertex; each degree-2 vertex must
  // be consumed exactly once; chains returning to their origin are loops.
  std::set<Edge> walked;
  std::multiset<std::pair<int, int>> chains;  // suppressed multigraph edges
  std::set<int> consumed;
  for (int b : branch) {
    for (int first : adj[b]) {
      Edge step(b, first);
      if (walked.count(step)) continue;
      walked.insert(step);
      int prev = b, cur = first;
      while (!is_branch.count(cur)) {
        consumed.insert(cur);
        const auto& nb = adj[cur];
        const int next = nb[0] == prev ? nb[1] : nb[0];
        walked.insert(Edge(cur, next));
        prev = cur;
        cur = next;
      }
      if (cur == b) return false;  // loop after suppression
      chains.insert({std::min(b, cur), std::max(b, cur)});
    }
  }
  // A cycle of degree-2 vertices has no branch endpoint and is never walked.
  std::size_t deg2_total = 0;
  for (const auto& [v, nb] : adj)
    if (nb.size() == 2) ++deg2_total;
  if (consumed.size() != deg2_total) return false;
  // Edge endpoints are normalized, so the reverse walk of a chain is skipped
  // and each chain appears exactly once; a repeat means parallel chains.
  std::set<std::pair<int, int>> simple_chains;
  for (const auto& c : chains) {
    if (chains.count(c) != 1) return false;  // parallel chains
    simple_chains.insert(c);
  }
  // Relabel the suppressed graph and test 3-connectivity by brute force.
  std::vector<int> ids(branch.begin(), branch.end());
  std::sort(ids.begin(), ids.end());
  auto rank = [&](int v) {
    return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };
  std::vector<Edge> relabeled;
  for (const auto& [a, b] : simple_chains) relabeled.emplace_back(rank(a), rank(b));
  const Graph suppressed(static_cast<int>(ids.size()), relabeled);
  return brute_vertex_connectivity_at_least(suppressed, 3);
}

// Random labeled graph with each edge present at probability percent/100.
inline Graph random_mask_graph(int n, int percent, std::mt19937& rng) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(keep3::rng_below(rng, 100)) < percent) es.emplace_back(u, v);
  return Graph(n, es);
}

}  // namespace oracles
