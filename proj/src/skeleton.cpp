#include "keep3/skeleton.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <set>

namespace keep3 {

bool Ear::contains(int v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

namespace {

bool set_fail(std::string* diag, std::string msg) {
  if (diag) *diag = std::move(msg);
  return false;
}

}  // namespace

std::optional<Skeleton> Skeleton::build(int host_order, std::vector<int> vertices,
                                        std::vector<Edge> edges, std::string* diag) {
  auto fail = [&](std::string msg) {
    set_fail(diag, std::move(msg));
    return std::nullopt;
  };
  if (vertices.empty()) return fail("no vertices");
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    return fail("duplicate vertex");
  if (vertices.front() < 0 || vertices.back() >= host_order)
    return fail("vertex outside the host");

  auto member = [&](int v) {
    return std::binary_search(vertices.begin(), vertices.end(), v);
  };
  EdgeSet es;
  std::vector<std::vector<int>> adj(host_order);
  for (const Edge& e : edges) {
    if (!member(e.u) || !member(e.v))
      return fail("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                  " leaves the vertex set");
    if (es.contains(e))
      return fail("duplicate edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    es.insert(e);
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());

  for (int v : vertices)
    if (adj[v].size() < 2)
      return fail("vertex " + std::to_string(v) + " has degree below two");

  {
    std::vector<char> seen(host_order, 0);
    std::vector<int> q{vertices.front()};
    seen[vertices.front()] = 1;
    std::size_t cnt = 1;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (int w : adj[q[i]])
        if (!seen[w]) {
          seen[w] = 1;
          ++cnt;
          q.push_back(w);
        }
    if (cnt != vertices.size()) return fail("not connected");
  }

  std::vector<int> branch, subdiv;
  for (int v : vertices)
    (adj[v].size() >= 3 ? branch : subdiv).push_back(v);
  if (branch.size() < 4)
    return fail("only " + std::to_string(branch.size()) + " branch vertices");

  // peel the ears off, walking from branch vertices through degree-2 chains
  std::set<Edge> consumed;
  std::vector<Ear> ears;
  for (int b : branch)
    for (int x : adj[b]) {
      if (consumed.count(Edge{b, x})) continue;
      Ear ear;
      ear.vertices = {b};
      int prev = b, cur = x;
      consumed.insert(Edge{b, x});
      while (adj[cur].size() == 2) {
        ear.vertices.push_back(cur);
        int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        consumed.insert(Edge{cur, nxt});
        prev = cur;
        cur = nxt;
      }
      ear.vertices.push_back(cur);
      if (cur == b) return fail("ear loops back to vertex " + std::to_string(b));
      if (ear.back() < ear.front()) std::reverse(ear.vertices.begin(), ear.vertices.end());
      ears.push_back(std::move(ear));
    }
  assert(consumed.size() == es.size());

  std::sort(ears.begin(), ears.end(),
            [](const Ear& a, const Ear& b) { return a.vertices < b.vertices; });
  std::set<std::pair<int, int>> spans;
  for (const Ear& e : ears)
    if (!spans.insert({e.front(), e.back()}).second)
      return fail("parallel ears between " + std::to_string(e.front()) + " and " +
                  std::to_string(e.back()));

  // the suppressed graph on the branch vertices must be simple 3-connected
  {
    std::vector<int> rank(host_order, -1);
    for (std::size_t i = 0; i < branch.size(); ++i) rank[branch[i]] = static_cast<int>(i);
    std::vector<Edge> bedges;
    for (const Ear& e : ears) bedges.push_back(Edge{rank[e.front()], rank[e.back()]});
    Graph bg(static_cast<int>(branch.size()), bedges);
    if (!vertex_connectivity_at_least(bg, 3)) return fail("suppressed graph not 3-connected");
  }

  Skeleton s;
  s.host_order_ = host_order;
  s.vertices_ = std::move(vertices);
  s.branch_ = std::move(branch);
  s.subdiv_ = std::move(subdiv);
  s.ears_ = std::move(ears);
  s.edges_ = std::move(es);
  s.adj_ = std::move(adj);
  s.ear_of_.assign(host_order, -1);
  for (std::size_t i = 0; i < s.ears_.size(); ++i) {
    const std::vector<int>& vs = s.ears_[i].vertices;
    for (std::size_t j = 1; j + 1 < vs.size(); ++j) s.ear_of_[vs[j]] = static_cast<int>(i);
  }
  for (int v : s.subdiv_) assert(s.ear_of_[v] >= 0);
  return s;
}

bool Skeleton::has_vertex(int v) const {
  return v >= 0 && v < host_order_ &&
         std::binary_search(vertices_.begin(), vertices_.end(), v);
}

int Skeleton::degree(int v) const {
  assert(has_vertex(v));
  return static_cast<int>(adj_[v].size());
}

const Ear& Skeleton::closed_ear_of(int v) const {
  assert(has_vertex(v) && adj_[v].size() == 2);
  return ears_[ear_of_[v]];
}

namespace {

std::optional<Skeleton> rebuild_checked(const Skeleton& base, std::vector<int> vertices,
                                        std::vector<Edge> edges, std::string* diag) {
  std::optional<Skeleton> next =
      Skeleton::build(base.host_order(), std::move(vertices), std::move(edges), diag);
  if (next) assert(next->potential() > base.potential());
  return next;
}

}  // namespace

std::optional<Skeleton> attach_vertex_move(const Skeleton& b, int w,
                                           const std::vector<int>& attach,
                                           std::string* diag) {
  auto fail = [&](std::string msg) {
    set_fail(diag, std::move(msg));
    return std::nullopt;
  };
  if (w < 0 || w >= b.host_order()) return fail("vertex outside the host");
  if (b.has_vertex(w)) return fail("vertex already in the subdivision");
  std::vector<int> pts = attach;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return fail("needs at least three attachment points");
  for (int p : pts)
    if (!b.has_vertex(p)) return fail("attachment point " + std::to_string(p) + " is outside");
  for (const Ear& ear : b.ears()) {
    bool all = true;
    for (int p : pts)
      if (!ear.contains(p)) {
        all = false;
        break;
      }
    if (all)
      return fail("attachment points all lie on the closed ear " +
                  std::to_string(ear.front()) + ".." + std::to_string(ear.back()));
  }
  std::vector<int> vertices = b.vertices();
  vertices.push_back(w);
  std::vector<Edge> edges(b.edge_set().begin(), b.edge_set().end());
  for (int p : pts) edges.push_back(Edge{w, p});
  return rebuild_checked(b, std::move(vertices), std::move(edges), diag);
}

std::optional<Skeleton> shortcut_ear_move(const Skeleton& b, int w, int ear_index, int p,
                                          int q, std::string* diag) {
  auto fail = [&](std::string msg) {
    set_fail(diag, std::move(msg));
    return std::nullopt;
  };
  if (w < 0 || w >= b.host_order()) return fail("vertex outside the host");
  if (b.has_vertex(w)) return fail("vertex already in the subdivision");
  if (ear_index < 0 || ear_index >= static_cast<int>(b.ears().size()))
    return fail("no such ear");
  const std::vector<int>& ev = b.ears()[ear_index].vertices;
  if (p < 0 || q >= static_cast<int>(ev.size()) || p >= q) return fail("bad ear positions");
  if (q - p < 3) return fail("segment too short to shrink the subdivision");

  std::set<int> dropped(ev.begin() + p + 1, ev.begin() + q);
  std::vector<int> vertices;
  for (int v : b.vertices())
    if (!dropped.count(v)) vertices.push_back(v);
  vertices.push_back(w);
  std::vector<Edge> edges;
  EdgeSet gone;
  for (int i = p; i < q; ++i) gone.insert(Edge{ev[i], ev[i + 1]});
  for (const Edge& e : b.edge_set())
    if (!gone.contains(e)) edges.push_back(e);
  edges.push_back(Edge{w, ev[p]});
  edges.push_back(Edge{w, ev[q]});
  return rebuild_checked(b, std::move(vertices), std::move(edges), diag);
}

std::optional<Skeleton> attach_fan_move(const Skeleton& b, const Fan& fan, std::string* diag) {
  auto fail = [&](std::string msg) {
    set_fail(diag, std::move(msg));
    return std::nullopt;
  };
  if (fan.paths.size() != 3) return fail("needs exactly three paths");
  int c = fan.center;
  if (c < 0 || c >= b.host_order()) return fail("centre outside the host");
  if (b.has_vertex(c)) return fail("centre already in the subdivision");
  std::set<int> fresh;
  std::vector<Edge> added;
  for (const std::vector<int>& path : fan.paths) {
    if (path.size() < 2 || path.front() != c) return fail("path must start at the centre");
    if (!b.has_vertex(path.back())) return fail("path must end in the subdivision");
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (b.has_vertex(path[i]) || path[i] == c) return fail("path interior not outside");
      if (!fresh.insert(path[i]).second) return fail("fan paths overlap");
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) added.push_back(Edge{path[i], path[i + 1]});
  }
  std::set<int> ends;
  for (const std::vector<int>& path : fan.paths)
    if (!ends.insert(path.back()).second) return fail("fan endpoints not distinct");

  std::vector<int> vertices = b.vertices();
  vertices.push_back(c);
  for (int v : fresh) vertices.push_back(v);
  std::vector<Edge> edges(b.edge_set().begin(), b.edge_set().end());
  for (const Edge& e : added) {
    if (b.edge_set().contains(e)) return fail("fan reuses a subdivision edge");
    edges.push_back(e);
  }
  return rebuild_checked(b, std::move(vertices), std::move(edges), diag);
}

std::optional<Skeleton> attach_path_move(const Skeleton& b, const std::vector<int>& path,
                                         std::string* diag) {
  auto fail = [&](std::string msg) {
    set_fail(diag, std::move(msg));
    return std::nullopt;
  };
  if (path.size() < 2) return fail("path too short");
  int u = path.front(), end = path.back();
  if (!b.has_vertex(u) || b.degree(u) != 2)
    return fail("path must start at a degree-two vertex");
  if (!b.has_vertex(end)) return fail("path must end in the subdivision");
  if (b.closed_ear_of(u).contains(end))
    return fail("path ends on the closed ear of its start");
  std::set<int> fresh;
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    if (b.has_vertex(path[i])) return fail("path interior not outside");
    if (!fresh.insert(path[i]).second) return fail("path repeats a vertex");
  }
  std::vector<int> vertices = b.vertices();
  for (int v : fresh) vertices.push_back(v);
  std::vector<Edge> edges(b.edge_set().begin(), b.edge_set().end());
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    Edge e{path[i], path[i + 1]};
    if (b.edge_set().contains(e)) return fail("path reuses a subdivision edge");
    edges.push_back(e);
  }
  return rebuild_checked(b, std::move(vertices), std::move(edges), diag);
}

// --- initial subdivision ------------------------------------------------------

namespace {

// worklist reduction to the degree >= 3 core
struct Core {
  int n, words;
  std::vector<uint64_t> bits;
  std::vector<int> deg;
  std::vector<char> alive;

  explicit Core(const Graph& g)
      : n(g.order()), words((g.order() + 63) / 64), bits(static_cast<std::size_t>(n) * words, 0),
        deg(n, 0), alive(n, 1) {
    for (const Edge& e : g.edges()) {
      set_bit(e.u, e.v);
      set_bit(e.v, e.u);
      ++deg[e.u];
      ++deg[e.v];
    }
  }

  void set_bit(int u, int v) { bits[static_cast<std::size_t>(u) * words + v / 64] |= 1ull << (v % 64); }
  void clear_bit(int u, int v) { bits[static_cast<std::size_t>(u) * words + v / 64] &= ~(1ull << (v % 64)); }
  bool test_bit(int u, int v) const {
    return bits[static_cast<std::size_t>(u) * words + v / 64] >> (v % 64) & 1;
  }

  template <typename F>
  void each_neighbor(int v, F f) const {
    for (int w = 0; w < words; ++w) {
      uint64_t word = bits[static_cast<std::size_t>(v) * words + w];
      while (word) {
        int b = std::countr_zero(word);
        word &= word - 1;
        f(w * 64 + b);
      }
    }
  }

  void drop_edge(int u, int v) {
    clear_bit(u, v);
    clear_bit(v, u);
    --deg[u];
    --deg[v];
  }

  bool reduce() {  // true when a nonempty core survives
    std::vector<int> work;
    std::vector<char> queued(n, 1);
    for (int v = 0; v < n; ++v) work.push_back(v);
    while (!work.empty()) {
      int v = work.back();
      work.pop_back();
      queued[v] = 0;
      if (!alive[v]) continue;
      auto requeue = [&](int w) {
        if (alive[w] && !queued[w]) {
          queued[w] = 1;
          work.push_back(w);
        }
      };
      if (deg[v] <= 1) {
        alive[v] = 0;
        std::vector<int> nbrs;
        each_neighbor(v, [&](int w) { nbrs.push_back(w); });
        for (int w : nbrs) {
          drop_edge(v, w);
          requeue(w);
        }
      } else if (deg[v] == 2) {
        int a = -1, bb = -1;
        each_neighbor(v, [&](int w) { (a < 0 ? a : bb) = w; });
        alive[v] = 0;
        drop_edge(v, a);
        drop_edge(v, bb);
        if (!test_bit(a, bb)) {
          set_bit(a, bb);
          set_bit(bb, a);
          ++deg[a];
          ++deg[bb];
        }
        requeue(a);
        requeue(bb);
      }
    }
    for (int v = 0; v < n; ++v)
      if (alive[v]) return true;
    return false;
  }
};

}  // namespace

bool contains_k4_subdivision(const Graph& g) {
  if (g.order() < 4) return false;
  Core core(g);
  return core.reduce();
}

std::optional<Skeleton> initial_skeleton(const Graph& h) {
  if (!contains_k4_subdivision(h)) return std::nullopt;
  // an edge's deletability is monotone under deletion, so one sweep suffices
  Graph cur = h;
  for (const Edge& e : h.edges()) {
    EdgeSet one;
    one.insert(e);
    Graph next = remove_edges(cur, one);
    if (contains_k4_subdivision(next)) cur = std::move(next);
  }
  std::vector<int> vertices;
  for (int v = 0; v < cur.order(); ++v)
    if (cur.degree(v) > 0) vertices.push_back(v);
  std::string diag;
  std::optional<Skeleton> s = Skeleton::build(h.order(), vertices, cur.edges(), &diag);
  assert(s);  // an edge-minimal core is exactly one K4 subdivision
  return s;
}

}  // namespace keep3
