#include "keep3/search.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace keep3 {

namespace {

std::string join_ints(const std::vector<int>& xs, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string make_bundle(const SearchState& st, const std::string& reason) {
  std::ostringstream out;
  out << "reason: " << reason << '\n';
  out << "mode: " << mode_name(st.options.mode) << '\n';
  out << "graph6: " << encode_graph6(st.host) << '\n';
  out << "tree: " << st.pattern.format() << '\n';
  out << "embedding:";
  for (int pv = 0; pv < st.pattern.order(); ++pv) out << ' ' << pv << ':' << st.tree.to_host[pv];
  out << '\n';
  out << "skeleton-vertices: " << join_ints(st.skeleton.vertices(), ' ') << '\n';
  out << "skeleton-edges:";
  for (const Edge& e : st.skeleton.edge_set()) out << ' ' << e.u << '-' << e.v;
  out << '\n';
  out << "trace:";
  for (const MoveRecord& r : st.trace)
    out << ' ' << r.kind << '[' << r.detail << "](" << r.after.branch_count << ','
        << -r.after.neg_order << ')';
  out << '\n';
  return out.str();
}

}  // namespace

std::optional<Claim1Hit> claim1_scan(const Graph& working, const Skeleton& b) {
  for (int w = 0; w < working.order(); ++w) {
    if (b.has_vertex(w)) continue;
    std::vector<int> aw;
    working.for_each_neighbor(w, [&](int v) {
      if (b.has_vertex(v)) aw.push_back(v);
    });
    if (static_cast<int>(aw.size()) < 4) continue;
    Claim1Hit hit;
    hit.w = w;
    hit.attach = aw;
    for (std::size_t ei = 0; ei < b.ears().size(); ++ei) {
      const Ear& ear = b.ears()[ei];
      bool all = true;
      for (int v : aw)
        if (!ear.contains(v)) {
          all = false;
          break;
        }
      if (!all) continue;
      hit.on_one_ear = true;
      hit.ear_index = static_cast<int>(ei);
      const std::vector<int>& evs = ear.vertices;
      for (std::size_t i = 0; i < evs.size(); ++i)
        if (std::find(aw.begin(), aw.end(), evs[i]) != aw.end()) {
          if (hit.p < 0) hit.p = static_cast<int>(i);
          hit.q = static_cast<int>(i);
        }
      assert(hit.q - hit.p >= 3);
      break;
    }
    return hit;
  }
  return std::nullopt;
}

std::optional<Embedding> free_edges_reembed(const Graph& g, const TreePattern& t,
                                            const Skeleton& b, int x, int count,
                                            long budget) {
  if (t.is_star()) return std::nullopt;  // the star has its own case
  if (x < 0 || x >= g.order() || b.has_vertex(x)) return std::nullopt;
  std::vector<int> into;
  g.for_each_neighbor(x, [&](int w) {
    if (b.has_vertex(w)) into.push_back(w);
  });
  if (static_cast<int>(into.size()) < count) return std::nullopt;
  EdgeSet keep_free;
  for (int i = 0; i < count; ++i) keep_free.insert(Edge{x, into[i]});

  std::vector<char> allowed(g.order(), 1);
  for (int v : b.vertices()) allowed[v] = 0;
  std::optional<Embedding> inner = greedy_embed_internal(g, t, allowed, budget);
  if (!inner) return std::nullopt;
  ReservedMap reserved;
  for (int pv = 0; pv < t.order(); ++pv)
    if (inner->to_host[pv] == x) reserved[pv] = keep_free;
  ExtendOutcome out = extend_embedding(g, *inner, b.edge_set(), reserved, budget);
  return std::move(out.embedding);
}

std::optional<StarCase> star_case(const Graph& g, const TreePattern& t, const Skeleton& b,
                                  int x) {
  if (!t.is_star() || t.order() < 3) return std::nullopt;
  int center_pv = t.internals().front();

  int host_center = -1;
  bool closing = false;
  for (int y = 0; y < g.order(); ++y)
    if (y != x && !b.has_vertex(y)) {
      host_center = y;
      break;
    }
  if (host_center < 0) {
    host_center = x;
    closing = true;
  }

  std::vector<int> nb = g.neighbors(host_center);
  if (static_cast<int>(nb.size()) < t.order() - 1) return std::nullopt;
  Embedding emb(t);
  emb.map(center_pv, host_center);
  std::vector<int> leaves = t.leaves();
  for (std::size_t i = 0; i < leaves.size(); ++i) emb.map(leaves[i], nb[i]);
  return StarCase{std::move(emb), closing};
}

std::optional<std::vector<int>> bridging_path_search(const Graph& graph, const Skeleton& b,
                                                     int max_order) {
  if (b.subdivision_vertices().empty())
    throw std::invalid_argument("bridging path: the subdivision has no degree-two vertex");
  std::optional<std::vector<int>> best;
  for (int u : b.subdivision_vertices()) {
    const Ear& home = b.closed_ear_of(u);
    // breadth-first through outside vertices only; stop at the first vertex
    // of the subdivision off the home ear
    std::vector<int> parent(graph.order(), -2);
    std::vector<int> queue{u};
    parent[u] = -1;
    std::vector<int> hit;  // (found target, found from)
    for (std::size_t i = 0; i < queue.size() && hit.empty(); ++i) {
      int cur = queue[i];
      graph.for_each_neighbor(cur, [&](int w) {
        if (!hit.empty() || parent[w] != -2) return;
        if (b.has_vertex(w)) {
          if (!home.contains(w)) hit = {w, cur};
          return;  // never pass through the subdivision
        }
        parent[w] = cur;
        queue.push_back(w);
      });
    }
    if (hit.empty()) continue;
    std::vector<int> path{hit[0]};
    for (int v = hit[1]; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    if (static_cast<int>(path.size()) > max_order) continue;
    if (!best || path.size() < best->size()) best = std::move(path);
  }
  return best;
}

bool verify_removal(const Graph& g, const TreePattern& t, const Embedding& emb, Mode mode,
                    std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (!emb.complete()) return fail("placement incomplete");
  if (!emb.verify(g, why)) return false;
  if (emb.pattern.ahu_canonical() != t.ahu_canonical())
    return fail("placed pattern is not the requested tree");
  Graph rest = remove_edges(g, emb.image_edges());
  if (!connectivity_at_least(rest, 3, mode))
    return fail(std::string("leftover graph is not 3-") +
                (mode == Mode::vertex ? "connected" : "edge-connected"));
  return true;
}

namespace {

std::optional<Embedding> reembed_avoiding(const Graph& g, const TreePattern& t,
                                          const Skeleton& b, long budget) {
  std::vector<char> allowed(g.order(), 1);
  for (int v : b.vertices()) allowed[v] = 0;
  std::optional<Embedding> inner = greedy_embed_internal(g, t, allowed, budget);
  if (!inner) return std::nullopt;
  ExtendOutcome out = extend_embedding(g, *inner, b.edge_set(), {}, budget);
  return std::move(out.embedding);
}

int claim3_vertex(const Graph& g, const Skeleton& b) {
  for (int x = 0; x < g.order(); ++x) {
    if (b.has_vertex(x)) continue;
    int cnt = 0;
    g.for_each_neighbor(x, [&](int w) {
      if (b.has_vertex(w)) ++cnt;
    });
    if (cnt >= 4) return x;
  }
  return -1;
}

}  // namespace

FindResult resume_search(SearchState st) {
  FindResult res;
  const Graph& g = st.host;
  const Mode mode = st.options.mode;
  long moves_left =
      st.options.move_budget < 0
          ? static_cast<long>(g.order()) * g.order()
          : st.options.move_budget;
  long passes_left = 2 * moves_left + 8;

  auto finish_fail = [&](const std::string& reason) {
    res.failure = FailureDiagnostic{reason, make_bundle(st, reason)};
    res.trace = st.trace;
    return std::move(res);
  };
  auto record = [&](std::string kind, std::string detail, bool grew) {
    st.trace.push_back(
        MoveRecord{std::move(kind), std::move(detail), st.skeleton.potential(), grew});
  };

  while (passes_left-- > 0) {
    {
      EdgeSet image = st.tree.image_edges();
      for (const Edge& e : st.skeleton.edge_set()) {
        assert(!image.contains(e));
        (void)e;
      }
    }
    Graph working = remove_edges(g, st.tree.image_edges());

    if (connectivity_at_least(working, 3, mode)) {
      std::string why;
      if (!verify_removal(g, st.pattern, st.tree, mode, &why))
        return finish_fail("verification failed: " + why);
      res.tree = st.tree;
      res.trace = st.trace;
      return res;
    }
    if (moves_left <= 0) return finish_fail("budget exhausted");

    if (std::optional<Claim1Hit> hit = claim1_scan(working, st.skeleton)) {
      std::string diag;
      std::optional<Skeleton> next;
      if (hit->on_one_ear)
        next = shortcut_ear_move(st.skeleton, hit->w, hit->ear_index, hit->p, hit->q, &diag);
      else
        next = attach_vertex_move(st.skeleton, hit->w, hit->attach, &diag);
      if (!next)
        return finish_fail(std::string("no move applicable: the ") +
                           (hit->on_one_ear ? "shortcut" : "attach") + " at vertex " +
                           std::to_string(hit->w) + " was rejected (" + diag + ")");
      st.skeleton = std::move(*next);
      --moves_left;
      record(hit->on_one_ear ? "shortcut" : "attach",
             "w=" + std::to_string(hit->w) + " pts=" + join_ints(hit->attach), true);
      continue;
    }

    if (int x = claim3_vertex(g, st.skeleton); x >= 0) {
      if (st.pattern.is_star()) {
        std::optional<StarCase> sc = star_case(g, st.pattern, st.skeleton, x);
        if (!sc)
          return finish_fail("re-embedding failed: no vertex has enough neighbours for the star");
        if (sc->closing) {
          Graph after = remove_edges(g, sc->embedding.image_edges());
          if (!connectivity_at_least(after, 3, mode))
            return finish_fail(
                "no move applicable: the star spans the host at vertex " + std::to_string(x) +
                " yet the leftover misses the connectivity target");
          st.tree = std::move(sc->embedding);
          record("star-close", "x=" + std::to_string(x), false);
          std::string why;
          if (!verify_removal(g, st.pattern, st.tree, mode, &why))
            return finish_fail("verification failed: " + why);
          res.tree = st.tree;
          res.trace = st.trace;
          return res;
        }
        int y = sc->embedding.to_host[st.pattern.internals().front()];
        st.tree = std::move(sc->embedding);
        record("star-recenter", "x=" + std::to_string(x) + " y=" + std::to_string(y), false);
        continue;
      }
      std::optional<Embedding> moved =
          free_edges_reembed(g, st.pattern, st.skeleton, x, 4, st.options.backtrack_budget);
      if (!moved)
        return finish_fail("re-embedding failed: could not keep four edges free at vertex " +
                           std::to_string(x));
      st.tree = std::move(*moved);
      record("reembed", "x=" + std::to_string(x), false);
      continue;
    }

    if (st.skeleton.subdivision_vertices().empty()) {
      // every subdivision vertex is a branch vertex: grow with a fan
      struct Candidate {
        int total;
        int center;
        Fan fan;
      };
      std::vector<Candidate> cands;
      for (int u = 0; u < g.order(); ++u) {
        if (st.skeleton.has_vertex(u)) continue;
        FanSearch fs = min_fan(g, u, st.skeleton.vertices(), 3);
        if (fs.fan) cands.push_back({fs.fan->total_order(), u, std::move(*fs.fan)});
      }
      if (cands.empty())
        return finish_fail("no move applicable: no three-path fan reaches the subdivision");
      // the proof allows any outside centre; start from the smallest, and
      // on a failed re-embedding move to strictly smaller fans
      std::size_t pick = 0;
      bool committed = false;
      int bound = INT_MAX;
      while (true) {
        const Candidate& c = cands[pick];
        std::string diag;
        std::optional<Skeleton> next = attach_fan_move(st.skeleton, c.fan, &diag);
        if (!next)
          return finish_fail("no move applicable: the fan at vertex " +
                             std::to_string(c.center) + " was rejected (" + diag + ")");
        std::optional<Embedding> moved =
            reembed_avoiding(g, st.pattern, *next, st.options.backtrack_budget);
        if (moved) {
          st.skeleton = std::move(*next);
          st.tree = std::move(*moved);
          --moves_left;
          record("fan", "center=" + std::to_string(c.center) +
                            " total=" + std::to_string(c.total), true);
          committed = true;
          break;
        }
        bound = c.total - 1;
        std::size_t best = cands.size();
        for (std::size_t i = 0; i < cands.size(); ++i)
          if (cands[i].total <= bound && (best == cands.size() || cands[i].total < cands[best].total))
            best = i;
        if (best == cands.size())
          return finish_fail("re-embedding failed: no fan leaves room for the tree");
        pick = best;
      }
      assert(committed);
      continue;
    }

    // a degree-two vertex exists: bridge it off its ear
    {
      int bound = INT_MAX;
      bool committed = false;
      while (!committed) {
        std::optional<std::vector<int>> path =
            bridging_path_search(working, st.skeleton, bound);
        bool from_full = false;
        if (!path) {
          // the working graph may be too thin; the full host still has the
          // path the proof promises, and the tree is re-embedded afterwards
          path = bridging_path_search(g, st.skeleton, bound);
          from_full = true;
        }
        if (!path) {
          if (bound == INT_MAX)
            return finish_fail("no move applicable: no path leaves the closed ear");
          return finish_fail("re-embedding failed: no shorter bridging path exists");
        }
        std::string diag;
        std::optional<Skeleton> next = attach_path_move(st.skeleton, *path, &diag);
        if (!next)
          return finish_fail("no move applicable: the bridging path from vertex " +
                             std::to_string(path->front()) + " was rejected (" + diag + ")");
        std::optional<Embedding> moved =
            reembed_avoiding(g, st.pattern, *next, st.options.backtrack_budget);
        if (moved) {
          if (from_full)
            res.warnings.push_back("bridging path taken from the full host graph");
          st.skeleton = std::move(*next);
          st.tree = std::move(*moved);
          --moves_left;
          record("path", "u=" + std::to_string(path->front()) +
                             " end=" + std::to_string(path->back()) +
                             " order=" + std::to_string(path->size()), true);
          committed = true;
        } else {
          bound = static_cast<int>(path->size()) - 1;
        }
      }
      continue;
    }
  }
  return finish_fail("budget exhausted");
}

FindResult find_removable_tree(const Graph& g, const TreePattern& t,
                               const SearchOptions& options) {
  FindResult res;
  const int m = t.order();
  auto fail_flat = [&](const std::string& reason) {
    std::string bundle = "reason: " + reason + "\nmode: " + mode_name(options.mode) +
                         "\ngraph6: " + (g.order() ? encode_graph6(g) : "") +
                         "\ntree: " + t.format() + "\n";
    res.failure = FailureDiagnostic{reason, std::move(bundle)};
    return std::move(res);
  };

  if (g.order() == 0) return fail_flat("no move applicable: the host is empty");
  if (m > g.order()) return fail_flat("no move applicable: the tree outgrows the host");
  if (min_degree(g) < m + 2)
    res.warnings.push_back("minimum degree " + std::to_string(min_degree(g)) + " is below " +
                           std::to_string(m + 2) + "; the guarantee does not apply");
  if (!connectivity_at_least(g, 3, options.mode)) {
    res.warnings.push_back(std::string("the host is not 3-") +
                           (options.mode == Mode::vertex ? "connected" : "edge-connected") +
                           "; the guarantee does not apply");
    return fail_flat("no move applicable: the host itself fails the connectivity predicate");
  }

  if (m == 1) {
    Embedding emb(t);
    emb.map(0, 0);
    res.tree = std::move(emb);
    return res;
  }
  if (m == 2) {
    for (const Edge& e : g.edges()) {
      EdgeSet one;
      one.insert(e);
      if (connectivity_at_least(remove_edges(g, one), 3, options.mode)) {
        Embedding emb(t);
        emb.map(0, e.u);
        emb.map(1, e.v);
        res.tree = std::move(emb);
        return res;
      }
    }
    return fail_flat("no move applicable: no single edge can be spared");
  }

  std::optional<Embedding> emb0 = embed_tree(g, t, {}, options.backtrack_budget);
  if (!emb0) return fail_flat("re-embedding failed: could not place the tree at all");
  std::optional<Skeleton> b0 = initial_skeleton(remove_edges(g, emb0->image_edges()));
  if (!b0) return fail_flat("no move applicable: the leftover graph holds no subdivision");

  FindResult out = resume_search(
      SearchState{g, t, options, std::move(*emb0), std::move(*b0), {}});
  out.warnings.insert(out.warnings.begin(), res.warnings.begin(), res.warnings.end());
  return out;
}

}  // namespace keep3
