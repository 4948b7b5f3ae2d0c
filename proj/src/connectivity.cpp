#include "keep3/connectivity.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <stdexcept>

namespace keep3 {

namespace {

struct FlowNet {
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;  // paired, id ^ 1 is the reverse arc
  std::vector<std::vector<int>> out;
  std::vector<int> level, iter;

  explicit FlowNet(int n) : out(n), level(n), iter(n) {}

  void add(int u, int v, int cap, int rcap = 0) {
    out[u].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({v, cap});
    out[v].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({u, rcap});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::vector<int> q{s};
    level[s] = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      int v = q[i];
      for (int id : out[v]) {
        const Arc& a = arcs[id];
        if (a.cap > 0 && level[a.to] < 0) {
          level[a.to] = level[v] + 1;
          q.push_back(a.to);
        }
      }
    }
    return level[t] >= 0;
  }

  int dfs(int v, int t, int f) {
    if (v == t) return f;
    for (int& i = iter[v]; i < static_cast<int>(out[v].size()); ++i) {
      int id = out[v][i];
      Arc& a = arcs[id];
      if (a.cap > 0 && level[a.to] == level[v] + 1) {
        int d = dfs(a.to, t, std::min(f, a.cap));
        if (d > 0) {
          a.cap -= d;
          arcs[id ^ 1].cap += d;
          return d;
        }
      }
    }
    return 0;
  }

  int max_flow(int s, int t, int limit) {
    int total = 0;
    while (total < limit && bfs(s, t)) {
      std::fill(iter.begin(), iter.end(), 0);
      int f;
      while (total < limit && (f = dfs(s, t, limit - total)) > 0) total += f;
    }
    return total;
  }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(out.size(), 0);
    std::vector<int> q{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (int id : out[q[i]])
        if (arcs[id].cap > 0 && !seen[arcs[id].to]) {
          seen[arcs[id].to] = 1;
          q.push_back(arcs[id].to);
        }
    return seen;
  }
};

// Vertex capacities one, in(v) = 2v, out(v) = 2v + 1, endpoints uncapped.
FlowNet split_net(const Graph& g, int s, int t, int limit) {
  FlowNet net(2 * g.order());
  for (int v = 0; v < g.order(); ++v) net.add(2 * v, 2 * v + 1, (v == s || v == t) ? limit : 1);
  for (const Edge& e : g.edges()) {
    net.add(2 * e.u + 1, 2 * e.v, limit);
    net.add(2 * e.v + 1, 2 * e.u, limit);
  }
  return net;
}

int vertex_flow(const Graph& g, int s, int t, int limit) {
  FlowNet net = split_net(g, s, t, limit);
  return net.max_flow(2 * s + 1, 2 * t, limit);
}

int edge_flow(const Graph& g, int s, int t, int limit) {
  FlowNet net(g.order());
  for (const Edge& e : g.edges()) net.add(e.u, e.v, 1, 1);
  return net.max_flow(s, t, limit);
}

bool removal_disconnects(const Graph& g, const std::vector<int>& cut) {
  std::vector<char> gone(g.order(), 0);
  for (int v : cut) gone[v] = 1;
  int left = 0, start = -1;
  for (int v = 0; v < g.order(); ++v)
    if (!gone[v]) {
      ++left;
      if (start < 0) start = v;
    }
  if (left <= 1) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<int> q{start};
  seen[start] = 1;
  int cnt = 1;
  for (std::size_t i = 0; i < q.size(); ++i)
    g.for_each_neighbor(q[i], [&](int w) {
      if (!gone[w] && !seen[w]) {
        seen[w] = 1;
        ++cnt;
        q.push_back(w);
      }
    });
  return cnt < left;
}

}  // namespace

bool connectivity_at_least(const Graph& g, int k, Mode mode) {
  return mode == Mode::vertex ? vertex_connectivity_at_least(g, k)
                              : edge_connectivity_at_least(g, k);
}

// Flow between one fixed low-degree vertex and every non-neighbor, then
// between non-adjacent pairs inside its neighborhood, covers every minimum
// separator. Complete graphs have connectivity n - 1.
bool vertex_connectivity_at_least(const Graph& g, int k) {
  if (k <= 0) return true;
  int n = g.order();
  if (n <= 1) return false;
  if (min_degree(g) < k) return false;
  int u0 = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) < g.degree(u0)) u0 = v;
  bool tested = false;
  for (int v = 0; v < n; ++v) {
    if (v == u0 || g.adjacent(u0, v)) continue;
    tested = true;
    if (vertex_flow(g, u0, v, k) < k) return false;
  }
  std::vector<int> nb = g.neighbors(u0);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!g.adjacent(nb[i], nb[j])) {
        tested = true;
        if (vertex_flow(g, nb[i], nb[j], k) < k) return false;
      }
  if (!tested) return n - 1 >= k;
  return true;
}

bool edge_connectivity_at_least(const Graph& g, int k) {
  if (k <= 0) return true;
  int n = g.order();
  if (n <= 1) return true;
  if (min_degree(g) < k) return false;
  for (int v = 1; v < n; ++v)
    if (edge_flow(g, 0, v, k) < k) return false;
  return true;
}

std::optional<std::vector<int>> find_vertex_cut_below(const Graph& g, int k) {
  if (k <= 0) return std::nullopt;
  int n = g.order();
  if (n <= 1) return std::vector<int>{};
  int u0 = 0;
  for (int v = 1; v < n; ++v)
    if (g.degree(v) < g.degree(u0)) u0 = v;
  if (g.degree(u0) < k) {
    if (g.degree(u0) + 1 < n) {
      std::vector<int> cut = g.neighbors(u0);
      assert(removal_disconnects(g, cut));
      return cut;
    }
    // minimum degree n - 1 means complete; strip all but one vertex
    std::vector<int> cut;
    for (int v = 1; v < n; ++v) cut.push_back(v);
    return cut;
  }

  auto extract = [&](int s, int t) {
    FlowNet net = split_net(g, s, t, k);
    net.max_flow(2 * s + 1, 2 * t, k);
    std::vector<char> reach = net.reachable(2 * s + 1);
    std::vector<int> cut;
    for (int v = 0; v < n; ++v)
      if (reach[2 * v] && !reach[2 * v + 1]) cut.push_back(v);
    assert(static_cast<int>(cut.size()) < k);
    assert(removal_disconnects(g, cut));
    return cut;
  };

  bool tested = false;
  for (int v = 0; v < n; ++v) {
    if (v == u0 || g.adjacent(u0, v)) continue;
    tested = true;
    if (vertex_flow(g, u0, v, k) < k) return extract(u0, v);
  }
  std::vector<int> nb = g.neighbors(u0);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!g.adjacent(nb[i], nb[j])) {
        tested = true;
        if (vertex_flow(g, nb[i], nb[j], k) < k) return extract(nb[i], nb[j]);
      }
  if (!tested && n - 1 < k) {
    std::vector<int> cut;
    for (int v = 1; v < n; ++v) cut.push_back(v);
    return cut;
  }
  return std::nullopt;
}

std::optional<std::vector<std::vector<int>>> disjoint_vertex_paths(const Graph& g, int s,
                                                                   int t, int k) {
  if (s == t) throw std::invalid_argument("disjoint_vertex_paths: equal endpoints");
  if (k <= 0) return std::vector<std::vector<int>>{};
  FlowNet net = split_net(g, s, t, k);
  if (net.max_flow(2 * s + 1, 2 * t, k) < k) return std::nullopt;

  // reverse arcs start empty, so the reverse cap now equals the net flow
  std::vector<int> used(net.arcs.size(), 0);
  for (std::size_t id = 0; id < net.arcs.size(); id += 2) used[id] = net.arcs[id ^ 1].cap;

  std::vector<std::vector<int>> paths;
  for (int round = 0; round < k; ++round) {
    std::vector<int> path{s};
    int cur = 2 * s + 1;
    while (cur != 2 * t) {
      int next = -1;
      for (int id : net.out[cur])
        if (id % 2 == 0 && used[id] > 0) {
          --used[id];
          next = net.arcs[id].to;
          break;
        }
      assert(next >= 0);
      cur = next;
      if (cur % 2 == 0) path.push_back(cur / 2);
    }
    paths.push_back(std::move(path));
  }
  return paths;
}

// --- minimum total order fans -----------------------------------------------

namespace {

constexpr long kForceReward = 1000000;

struct CostNet {
  struct Arc {
    int to;
    int cap;
    long cost;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out;
  int n;

  explicit CostNet(int nn) : out(nn), n(nn) {}

  void add(int u, int v, int cap, long cost) {
    out[u].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({v, cap, cost});
    out[v].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({u, 0, -cost});
  }

  // successive shortest augmenting paths, Bellman-Ford distances
  std::pair<int, long> min_cost_flow(int s, int t, int want) {
    int flow = 0;
    long cost = 0;
    const long inf = LONG_MAX / 4;
    while (flow < want) {
      std::vector<long> dist(n, inf);
      std::vector<int> par(n, -1);
      dist[s] = 0;
      for (int round = 0; round < n; ++round) {
        bool any = false;
        for (int u = 0; u < n; ++u) {
          if (dist[u] >= inf) continue;
          for (int id : out[u]) {
            const Arc& a = arcs[id];
            if (a.cap > 0 && dist[u] + a.cost < dist[a.to]) {
              dist[a.to] = dist[u] + a.cost;
              par[a.to] = id;
              any = true;
            }
          }
        }
        if (!any) break;
      }
      if (dist[t] >= inf) break;
      int bott = want - flow;
      for (int v = t; v != s;) {
        int id = par[v];
        bott = std::min(bott, arcs[id].cap);
        v = arcs[id ^ 1].to;
      }
      for (int v = t; v != s;) {
        int id = par[v];
        arcs[id].cap -= bott;
        arcs[id ^ 1].cap += bott;
        v = arcs[id ^ 1].to;
      }
      flow += bott;
      cost += bott * dist[t];
    }
    return {flow, cost};
  }

  std::vector<char> reachable(int s) const {
    std::vector<char> seen(out.size(), 0);
    std::vector<int> q{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < q.size(); ++i)
      for (int id : out[q[i]])
        if (arcs[id].cap > 0 && !seen[arcs[id].to]) {
          seen[arcs[id].to] = 1;
          q.push_back(arcs[id].to);
        }
    return seen;
  }
};

struct FanNet {
  CostNet net;
  int source, sink;
  std::vector<int> node_in, node_out, node_target;  // -1 where absent
  std::vector<int> target_arc;                      // target vertex -> sink arc id
  std::vector<int> vertex_of;                       // node -> graph vertex, -1 for source/sink

  FanNet(const Graph& g, int center, const std::vector<char>& is_target,
         const std::vector<char>& forced)
      : net(0), node_in(g.order(), -1), node_out(g.order(), -1), node_target(g.order(), -1),
        target_arc(g.order(), -1) {
    int next = 0;
    source = next++;
    for (int v = 0; v < g.order(); ++v) {
      if (v == center) continue;
      if (is_target[v]) {
        node_target[v] = next++;
      } else {
        node_in[v] = next++;
        node_out[v] = next++;
      }
    }
    sink = next++;
    net = CostNet(next);
    vertex_of.assign(next, -1);
    for (int v = 0; v < g.order(); ++v) {
      if (node_target[v] >= 0) vertex_of[node_target[v]] = v;
      if (node_in[v] >= 0) vertex_of[node_in[v]] = v;
    }

    for (int v = 0; v < g.order(); ++v)
      if (node_in[v] >= 0) net.add(node_in[v], node_out[v], 1, 1);
    for (const Edge& e : g.edges()) {
      int a = e.u, b = e.v;
      auto connect = [&](int x, int y) {
        if (x == center) {
          if (is_target[y])
            net.add(source, node_target[y], 1, 0);
          else
            net.add(source, node_in[y], 1, 0);
        } else if (is_target[x]) {
          // targets never relay
        } else if (is_target[y]) {
          net.add(node_out[x], node_target[y], 1, 0);
        } else if (y != center) {
          net.add(node_out[x], node_in[y], 1, 0);
        }
      };
      connect(a, b);
      connect(b, a);
    }
    for (int v = 0; v < g.order(); ++v)
      if (node_target[v] >= 0) {
        target_arc[v] = static_cast<int>(net.arcs.size());
        net.add(node_target[v], sink, 1, forced[v] ? -kForceReward : 0);
      }
  }
};

}  // namespace

FanSearch min_fan(const Graph& g, int center, const std::vector<int>& targets_in, int k) {
  if (k < 1) throw std::invalid_argument("min_fan: k must be positive");
  if (center < 0 || center >= g.order())
    throw std::invalid_argument("min_fan: center out of range");
  std::vector<int> targets = targets_in;
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  std::vector<char> is_target(g.order(), 0);
  for (int s : targets) {
    if (s < 0 || s >= g.order()) throw std::invalid_argument("min_fan: target out of range");
    if (s == center) throw std::invalid_argument("min_fan: center listed as target");
    is_target[s] = 1;
  }

  std::vector<char> no_force(g.order(), 0);
  FanNet base(g, center, is_target, no_force);
  auto [flow, interior] = base.net.min_cost_flow(base.source, base.sink, k);

  if (flow < k) {
    // Every saturated arc crossing the residual cut blames one graph vertex:
    // the head's vertex for entry arcs, the tail's for split and sink arcs.
    std::vector<char> reach = base.net.reachable(base.source);
    std::vector<char> in_sep(g.order(), 0);
    std::vector<int> sep;
    for (int u = 0; u < base.net.n; ++u) {
      if (!reach[u]) continue;
      for (int id : base.net.out[u]) {
        if (id % 2 != 0) continue;  // forward arcs only
        int head = base.net.arcs[id].to;
        if (reach[head]) continue;
        int v = base.vertex_of[head] >= 0 ? base.vertex_of[head] : base.vertex_of[u];
        assert(v >= 0);
        if (!in_sep[v]) {
          in_sep[v] = 1;
          sep.push_back(v);
        }
      }
    }
    // the separator must block every center-target path
    std::vector<char> blocked(g.order(), 0);
    for (int v : sep) blocked[v] = 1;
    std::vector<char> seen(g.order(), 0);
    std::vector<int> q{center};
    seen[center] = 1;
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (is_target[q[i]]) continue;  // paths stop at targets
      g.for_each_neighbor(q[i], [&](int w) {
        if (!blocked[w] && !seen[w]) {
          seen[w] = 1;
          q.push_back(w);
        }
      });
    }
    for (int s : targets) assert(blocked[s] || !seen[s]);
    assert(static_cast<int>(sep.size()) < k);
    return {std::nullopt, sep};
  }

  // among fans of minimum total order, pick lexicographically least endpoints
  std::vector<char> forced(g.order(), 0);
  int forced_count = 0;
  auto feasible = [&](const std::vector<char>& f, int fcount, FanNet* keep) -> bool {
    FanNet cand(g, center, is_target, f);
    auto [fl, cost] = cand.net.min_cost_flow(cand.source, cand.sink, k);
    if (fl < k) return false;
    if (cost + static_cast<long>(fcount) * kForceReward != interior) return false;
    for (int v = 0; v < g.order(); ++v)
      if (f[v] && cand.net.arcs[cand.target_arc[v]].cap != 0) return false;
    if (keep) *keep = std::move(cand);
    return true;
  };
  FanNet final_net = std::move(base);
  for (int slot = 0; slot < k; ++slot) {
    bool advanced = false;
    for (int s : targets) {
      if (forced[s]) continue;
      forced[s] = 1;
      if (feasible(forced, forced_count + 1, slot + 1 == k ? &final_net : nullptr)) {
        ++forced_count;
        advanced = true;
        break;
      }
      forced[s] = 0;
    }
    assert(advanced);
    if (!advanced) break;
  }

  // decompose the final flow into the k paths
  CostNet& net = final_net.net;
  std::vector<int> used(net.arcs.size(), 0);
  for (std::size_t id = 0; id < net.arcs.size(); id += 2)
    used[id] = net.arcs[id].cap == 0 ? 1 : 0;

  Fan fan;
  fan.center = center;
  for (int round = 0; round < k; ++round) {
    std::vector<int> path{center};
    int cur = final_net.source;
    while (cur != final_net.sink) {
      int next = -1;
      for (int id : net.out[cur])
        if (id % 2 == 0 && used[id] > 0) {
          --used[id];
          next = net.arcs[id].to;
          break;
        }
      assert(next >= 0);
      cur = next;
      if (final_net.vertex_of[cur] >= 0) path.push_back(final_net.vertex_of[cur]);
    }
    fan.paths.push_back(std::move(path));
  }
  std::sort(fan.paths.begin(), fan.paths.end(),
            [](const auto& a, const auto& b) { return a.back() < b.back(); });

  assert(fan.total_order() == 2 * k + static_cast<int>(interior));
  return {fan, {}};
}

}  // namespace keep3
