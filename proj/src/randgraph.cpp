#include "keep3/randgraph.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

namespace keep3 {

std::uint32_t rng_below(std::mt19937& rng, std::uint32_t bound) {
  if (bound == 0) throw std::invalid_argument("rng_below: bound must be positive");
  const std::uint32_t limit = std::numeric_limits<std::uint32_t>::max() -
                              std::numeric_limits<std::uint32_t>::max() % bound;
  std::uint32_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

void shuffle_ints(std::vector<int>& values, std::mt19937& rng) {
  for (std::size_t i = values.size(); i > 1; --i)
    std::swap(values[i - 1], values[rng_below(rng, static_cast<std::uint32_t>(i))]);
}

namespace {

// Greedy realization of a degree sequence: repeatedly connect the vertex of
// largest remaining deficit to the next-largest-deficit vertices. Succeeds
// exactly on graphical sequences; ties are broken by a random ranking so
// different seeds explore different realizations.
std::optional<std::vector<Edge>> realize_degrees(const std::vector<int>& target,
                                                 std::mt19937& rng) {
  const int n = static_cast<int>(target.size());
  std::vector<int> rank(n);
  for (int v = 0; v < n; ++v) rank[v] = v;
  shuffle_ints(rank, rng);
  std::vector<int> deficit = target;
  std::set<Edge> present;
  std::vector<Edge> edges;
  for (;;) {
    int u = -1;
    for (int v = 0; v < n; ++v)
      if (deficit[v] > 0 && (u < 0 || deficit[v] > deficit[u] ||
                             (deficit[v] == deficit[u] && rank[v] < rank[u])))
        u = v;
    if (u < 0) return edges;  // every deficit settled
    std::vector<int> candidates;
    for (int v = 0; v < n; ++v)
      if (v != u && deficit[v] > 0 && !present.count(Edge(u, v))) candidates.push_back(v);
    if (static_cast<int>(candidates.size()) < deficit[u]) return std::nullopt;
    std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      return deficit[a] != deficit[b] ? deficit[a] > deficit[b] : rank[a] < rank[b];
    });
    const int need = deficit[u];
    for (int i = 0; i < need; ++i) {
      const Edge e(u, candidates[i]);
      present.insert(e);
      edges.push_back(e);
      --deficit[candidates[i]];
    }
    deficit[u] = 0;
  }
}

// Degree-preserving rewiring: replace edges ab, cd by ac, bd when the four
// endpoints are distinct and both replacements are absent. Randomizes the
// realization away from the greedy one's structure.
void mix_edges(std::vector<Edge>& edges, std::mt19937& rng) {
  if (edges.size() < 2) return;
  std::set<Edge> present(edges.begin(), edges.end());
  const std::size_t swaps = 10 * edges.size();
  for (std::size_t step = 0; step < swaps; ++step) {
    const std::size_t i = rng_below(rng, static_cast<std::uint32_t>(edges.size()));
    const std::size_t j = rng_below(rng, static_cast<std::uint32_t>(edges.size()));
    if (i == j) continue;
    Edge ab = edges[i], cd = edges[j];
    if (rng_below(rng, 2)) std::swap(cd.u, cd.v);
    const int a = ab.u, b = ab.v, c = cd.u, d = cd.v;
    if (a == c || a == d || b == c || b == d) continue;
    const Edge ac(a, c), bd(b, d);
    if (present.count(ac) || present.count(bd)) continue;
    present.erase(ab);
    present.erase(edges[j]);
    present.insert(ac);
    present.insert(bd);
    edges[i] = ac;
    edges[j] = bd;
  }
}

}  // namespace

std::optional<Graph> random_near_regular(int n, int deg_lo, int deg_hi, std::mt19937& rng,
                                         int max_tries) {
  if (n < 0 || deg_lo < 0 || deg_hi < deg_lo || deg_hi >= std::max(n, 1))
    throw std::invalid_argument("random_near_regular: need 0 <= deg_lo <= deg_hi < n");
  if (n == 0) return Graph(0);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    std::vector<int> target(n);
    int total = 0;
    for (int v = 0; v < n; ++v) {
      target[v] = deg_lo + static_cast<int>(rng_below(
                               rng, static_cast<std::uint32_t>(deg_hi - deg_lo + 1)));
      total += target[v];
    }
    if (total % 2) {
      // Make the stub count even without leaving the degree window.
      std::vector<int> movable;
      for (int v = 0; v < n; ++v)
        if (target[v] < deg_hi) movable.push_back(v);
      if (movable.empty()) continue;  // all at deg_hi with odd sum: redraw
      target[movable[rng_below(rng, static_cast<std::uint32_t>(movable.size()))]] += 1;
    }
    std::optional<std::vector<Edge>> edges = realize_degrees(target, rng);
    if (!edges) continue;
    mix_edges(*edges, rng);
    std::sort(edges->begin(), edges->end());
    return Graph(n, *edges);
  }
  return std::nullopt;
}

}  // namespace keep3
