#include "keep3/embed.hpp"

#include <algorithm>
#include <cassert>

namespace keep3 {

bool Embedding::complete() const {
  return std::find(to_host.begin(), to_host.end(), -1) == to_host.end();
}

void Embedding::map(int pv, int host) {
  assert(pv >= 0 && pv < pattern.order());
  assert(to_host[pv] == -1);
  assert(std::find(to_host.begin(), to_host.end(), host) == to_host.end());
  to_host[pv] = host;
}

std::vector<int> Embedding::mapped_hosts() const {
  std::vector<int> out;
  for (int h : to_host)
    if (h >= 0) out.push_back(h);
  std::sort(out.begin(), out.end());
  return out;
}

EdgeSet Embedding::image_edges() const {
  EdgeSet out;
  for (const Edge& e : pattern.edges())
    if (to_host[e.u] >= 0 && to_host[e.v] >= 0) out.insert(Edge{to_host[e.u], to_host[e.v]});
  return out;
}

bool Embedding::verify(const Graph& host, std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  std::vector<int> hosts;
  for (int pv = 0; pv < pattern.order(); ++pv) {
    int h = to_host[pv];
    if (h == -1) continue;
    if (h < 0 || h >= host.order())
      return fail("vertex " + std::to_string(pv) + " mapped outside the host");
    hosts.push_back(h);
  }
  std::sort(hosts.begin(), hosts.end());
  if (std::adjacent_find(hosts.begin(), hosts.end()) != hosts.end())
    return fail("two pattern vertices share a host");
  for (const Edge& e : pattern.edges()) {
    if (to_host[e.u] < 0 || to_host[e.v] < 0) continue;
    if (!host.adjacent(to_host[e.u], to_host[e.v]))
      return fail("pattern edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                  " has no host edge");
  }
  return true;
}

namespace {

struct Grower {
  const Graph& g;
  const std::vector<char>& target;  // pattern vertices that must end up placed
  const EdgeSet& avoid;
  const ReservedMap& reserved;
  const std::vector<char>& allowed;  // empty = every host admissible
  long budget;
  int blocked = -1;

  bool host_ok(int h, const std::vector<char>& used) const {
    return !used[h] && (allowed.empty() || allowed[h]);
  }

  int free_degree(int h, const std::vector<char>& used) const {
    int d = 0;
    g.for_each_neighbor(h, [&](int w) {
      if (host_ok(w, used) && !avoid.contains(Edge{h, w})) ++d;
    });
    return d;
  }

  // the unplaced target vertex to handle next, or -1 when done;
  // neighbours of reserved pattern vertices go first
  int pick_pending(const Embedding& emb) const {
    int best = -1;
    bool best_reserved = false;
    for (int pv = 0; pv < emb.pattern.order(); ++pv) {
      if (!target[pv] || emb.to_host[pv] != -1) continue;
      int anchor = -1;
      emb.pattern.graph().for_each_neighbor(pv, [&](int w) {
        if (anchor == -1 && emb.to_host[w] != -1) anchor = w;
      });
      if (anchor == -1) continue;
      bool res = reserved.count(anchor) > 0;
      if (best == -1 || (res && !best_reserved)) {
        best = pv;
        best_reserved = res;
      }
    }
    return best;
  }

  bool grow(Embedding& emb, std::vector<char>& used) {
    bool open = false;
    for (int pv = 0; pv < emb.pattern.order(); ++pv)
      if (target[pv] && emb.to_host[pv] == -1) open = true;
    if (!open) return true;
    if (--budget < 0) return false;

    int pv = pick_pending(emb);
    if (pv == -1) return false;  // no anchored vertex left: disconnected target
    int anchor = -1;
    emb.pattern.graph().for_each_neighbor(pv, [&](int w) {
      if (anchor == -1 && emb.to_host[w] != -1) anchor = w;
    });
    int ah = emb.to_host[anchor];

    std::vector<std::pair<int, int>> cand;  // (-free degree, host)
    g.for_each_neighbor(ah, [&](int h) {
      if (host_ok(h, used) && !avoid.contains(Edge{ah, h}))
        cand.push_back({-free_degree(h, used), h});
    });
    std::sort(cand.begin(), cand.end());
    if (cand.empty()) blocked = pv;
    for (auto [key, h] : cand) {
      emb.to_host[pv] = h;
      used[h] = 1;
      if (grow(emb, used)) return true;
      used[h] = 0;
      emb.to_host[pv] = -1;
      if (budget < 0) return false;
    }
    if (!cand.empty()) blocked = pv;
    return false;
  }
};

EdgeSet merge_avoided(const EdgeSet& forbidden, const ReservedMap& reserved) {
  EdgeSet avoid = forbidden;
  for (const auto& [pv, edges] : reserved) avoid = avoid.merged(edges);
  return avoid;
}

}  // namespace

ExtendOutcome extend_embedding(const Graph& g, const Embedding& base, const EdgeSet& forbidden,
                               const ReservedMap& reserved, long budget) {
  EdgeSet avoid = merge_avoided(forbidden, reserved);
  std::vector<char> all_targets(base.pattern.order(), 1);
  std::vector<char> no_mask;
  Grower grower{g, all_targets, avoid, reserved, no_mask, budget};

  Embedding emb = base;
  std::vector<char> used(g.order(), 0);
  bool any = false;
  for (int h : base.to_host)
    if (h >= 0) {
      used[h] = 1;
      any = true;
    }

  auto finish = [&](Embedding done) {
    EdgeSet image = done.image_edges();
    for (const auto& entry : reserved)
      for (const Edge& e : entry.second) {
        assert(!image.contains(e));
        (void)e;
      }
    (void)image;
    return ExtendOutcome{std::move(done), -1};
  };

  if (any) {
    if (grower.grow(emb, used)) return finish(std::move(emb));
    return {std::nullopt, grower.blocked};
  }
  // nothing placed yet: anchor the centroid on each host in turn
  int root = base.pattern.centroids().front();
  for (int h = 0; h < g.order(); ++h) {
    emb.to_host[root] = h;
    used[h] = 1;
    if (grower.grow(emb, used)) return finish(std::move(emb));
    used[h] = 0;
    emb.to_host[root] = -1;
    if (grower.budget < 0) break;
  }
  return {std::nullopt, grower.blocked >= 0 ? grower.blocked : root};
}

std::optional<Embedding> greedy_embed_internal(const Graph& g, const TreePattern& t,
                                               const std::vector<char>& allowed_hosts,
                                               long budget) {
  Embedding emb(t);
  std::vector<int> internals = t.internals();
  if (internals.empty()) return emb;

  std::vector<char> target(t.order(), 0);
  for (int v : internals) target[v] = 1;
  EdgeSet none;
  ReservedMap no_reserved;
  Grower grower{g, target, none, no_reserved, allowed_hosts, budget};

  std::vector<char> used(g.order(), 0);
  int root = internals.front();
  for (int h = 0; h < g.order(); ++h) {
    if (!grower.host_ok(h, used)) continue;
    emb.to_host[root] = h;
    used[h] = 1;
    if (grower.grow(emb, used)) return emb;
    used[h] = 0;
    emb.to_host[root] = -1;
    if (grower.budget < 0) break;
  }
  return std::nullopt;
}

std::optional<Embedding> embed_tree(const Graph& g, const TreePattern& t,
                                    const EdgeSet& forbidden, long budget) {
  ExtendOutcome out = extend_embedding(g, Embedding(t), forbidden, {}, budget);
  return std::move(out.embedding);
}

}  // namespace keep3
