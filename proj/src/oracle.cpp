#include "keep3/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "keep3/search.hpp"

namespace keep3 {

namespace {

// Breadth-first placement order from pattern vertex 0; in a tree every
// non-root vertex has exactly one earlier neighbor (its parent).
struct PatternOrder {
  std::vector<int> order;
  std::vector<int> parent;
};

PatternOrder bfs_order(const TreePattern& t) {
  const int m = t.order();
  PatternOrder po;
  po.parent.assign(m, -1);
  po.order.reserve(m);
  std::vector<char> seen(m, 0);
  po.order.push_back(0);
  seen[0] = 1;
  for (std::size_t i = 0; i < po.order.size(); ++i) {
    for (int w : t.neighbors(po.order[i])) {
      if (!seen[w]) {
        seen[w] = 1;
        po.parent[w] = po.order[i];
        po.order.push_back(w);
      }
    }
  }
  return po;
}

}  // namespace

bool enumerate_tree_embeddings(const Graph& g, const TreePattern& t,
                               const std::function<bool(const Embedding&)>& visit) {
  const int m = t.order();
  const int n = g.order();
  if (m > n) return false;
  const PatternOrder po = bfs_order(t);
  std::vector<int> to_host(m, -1);
  std::vector<char> used(n, 0);
  bool stopped = false;

  auto place = [&](auto&& self, int idx) -> void {
    if (stopped) return;
    if (idx == m) {
      Embedding e(t, to_host);
      stopped = !visit(e);
      return;
    }
    const int pv = po.order[idx];
    const int need = t.degree(pv);
    if (idx == 0) {
      for (int h = 0; h < n && !stopped; ++h) {
        if (g.degree(h) < need) continue;
        to_host[pv] = h;
        used[h] = 1;
        self(self, idx + 1);
        used[h] = 0;
        to_host[pv] = -1;
      }
      return;
    }
    const int anchor = to_host[po.parent[pv]];
    g.for_each_neighbor(anchor, [&](int h) {
      if (stopped || used[h] || g.degree(h) < need) return;
      to_host[pv] = h;
      used[h] = 1;
      self(self, idx + 1);
      used[h] = 0;
      to_host[pv] = -1;
    });
  };
  place(place, 0);
  return stopped;
}

std::int64_t count_tree_embeddings(const Graph& g, const TreePattern& t) {
  std::int64_t count = 0;
  enumerate_tree_embeddings(g, t, [&](const Embedding&) {
    ++count;
    return true;
  });
  return count;
}

std::optional<Embedding> oracle_find(const Graph& g, const TreePattern& t, Mode mode,
                                     int k) {
  std::optional<Embedding> hit;
  enumerate_tree_embeddings(g, t, [&](const Embedding& e) {
    if (connectivity_at_least(remove_edges(g, e.image_edges()), k, mode)) {
      hit = e;
      return false;
    }
    return true;
  });
  return hit;
}

std::int64_t count_removable_embeddings(const Graph& g, const TreePattern& t, Mode mode,
                                        int k) {
  std::int64_t count = 0;
  enumerate_tree_embeddings(g, t, [&](const Embedding& e) {
    if (connectivity_at_least(remove_edges(g, e.image_edges()), k, mode)) ++count;
    return true;
  });
  return count;
}

void enumerate_graphs_labeled(int n, int min_deg, int k, Mode mode,
                              const std::function<void(const Graph&)>& visit) {
  if (n < 0 || n > 7)
    throw std::invalid_argument("enumerate_graphs_labeled: n must be in [0,7], got " +
                                std::to_string(n));
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  const int bits = static_cast<int>(slots.size());
  std::vector<Edge> chosen;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << bits); ++mask) {
    chosen.clear();
    for (int b = 0; b < bits; ++b)
      if (mask >> b & 1) chosen.push_back(slots[b]);
    Graph g(n, chosen);
    if (n > 0 && min_degree(g) < min_deg) continue;
    if (!connectivity_at_least(g, k, mode)) continue;
    visit(g);
  }
}

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::finder: return "finder";
    case Engine::oracle: return "oracle";
    default: return "both";
  }
}

std::string ExploreRecord::format() const {
  std::ostringstream out;
  out << "record graph=" << graph_index << " m=" << m << " tree=" << tree_index
      << " hyp=" << (hypotheses ? 1 : 0) << " finder=" << finder << " oracle=" << oracle
      << " agree=" << (agree ? 1 : 0) << " cex=" << (counterexample ? 1 : 0);
  if (removable_count >= 0) out << " count=" << removable_count;
  return out.str();
}

std::string ExploreReport::summary() const {
  std::int64_t hyp = 0, finder_ok = 0, finder_fail = 0, oracle_found = 0, oracle_none = 0;
  for (const ExploreRecord& r : records) {
    hyp += r.hypotheses;
    finder_ok += r.finder == "ok";
    finder_fail += r.finder == "fail";
    oracle_found += r.oracle == "found";
    oracle_none += r.oracle == "none";
  }
  std::ostringstream out;
  out << "summary mode=" << mode_name(mode) << " k=" << k << " engine=" << engine_name(engine)
      << " instances=" << records.size() << " hypotheses=" << hyp
      << " finder_ok=" << finder_ok << " finder_fail=" << finder_fail
      << " oracle_found=" << oracle_found << " oracle_none=" << oracle_none
      << " disagreements=" << disagreements.size()
      << " counterexamples=" << counterexamples.size()
      << " parse_errors=" << parse_issues.size();
  return out.str();
}

namespace {

struct Instance {
  int graph_index;
  const Graph* graph;
  int m;
  int tree_index;
  const TreePattern* tree;
};

std::string replay_bundle(const ExploreRecord& r, const Graph& g, const TreePattern& t,
                          Mode mode, int k, const FindResult* finder_result) {
  std::ostringstream out;
  out << "replay graph6=" << r.graph6 << "\n";
  out << "replay tree=" << t.format() << "\n";
  out << "replay mode=" << mode_name(mode) << " k=" << k << "\n";
  out << "replay min_degree=" << (g.order() ? min_degree(g) : 0)
      << " order=" << g.order() << " size=" << g.size() << "\n";
  out << "replay finder=" << r.finder << " oracle=" << r.oracle << "\n";
  if (finder_result && finder_result->failure) {
    out << "replay finder_reason=" << finder_result->failure->reason << "\n";
  }
  return out.str();
}

ExploreRecord run_instance(const Instance& in, int k, Mode mode, Engine engine,
                           bool count_all) {
  const auto started = std::chrono::steady_clock::now();
  const Graph& g = *in.graph;
  const TreePattern& t = *in.tree;
  ExploreRecord rec;
  rec.graph_index = in.graph_index;
  rec.graph6 = encode_graph6(g);
  rec.m = in.m;
  rec.tree_index = in.tree_index;
  rec.hypotheses = g.order() > 0 && min_degree(g) >= k + in.m - 1 &&
                   connectivity_at_least(g, k, mode);

  std::optional<FindResult> finder_result;
  bool finder_ran = false, finder_ok = false;
  if ((engine == Engine::finder || engine == Engine::both) && k == 3) {
    SearchOptions opt;
    opt.mode = mode;
    finder_result = find_removable_tree(g, t, opt);
    finder_ran = true;
    finder_ok = finder_result->ok();
  }
  rec.finder = finder_ran ? (finder_ok ? "ok" : "fail") : "skip";

  bool oracle_ran = false, oracle_found = false;
  if (engine == Engine::oracle || engine == Engine::both || count_all) {
    if (count_all) {
      rec.removable_count = count_removable_embeddings(g, t, mode, k);
      oracle_found = rec.removable_count > 0;
    } else {
      oracle_found = oracle_find(g, t, mode, k).has_value();
    }
    oracle_ran = true;
  }
  rec.oracle = oracle_ran ? (oracle_found ? "found" : "none") : "skip";

  rec.agree = !(finder_ran && oracle_ran) || finder_ok == oracle_found;
  rec.counterexample = rec.hypotheses && oracle_ran && !oracle_found;
  if (!rec.agree || rec.counterexample)
    rec.bundle = replay_bundle(rec, g, t, mode, k,
                               finder_result ? &*finder_result : nullptr);
  rec.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - started)
                   .count();
  return rec;
}

}  // namespace

ExploreReport explore(const std::vector<std::string>& corpus_lines,
                      const std::vector<int>& m_values, int k, Mode mode, Engine engine,
                      int workers, bool count_all) {
  ExploreReport report;
  report.mode = mode;
  report.k = k;
  report.engine = engine;
  report.m_values = m_values;
  std::sort(report.m_values.begin(), report.m_values.end());
  report.m_values.erase(std::unique(report.m_values.begin(), report.m_values.end()),
                        report.m_values.end());

  std::vector<Graph> corpus;
  corpus.reserve(corpus_lines.size());
  for (std::size_t i = 0; i < corpus_lines.size(); ++i) {
    std::string word = corpus_lines[i];
    while (!word.empty() && (word.back() == '\n' || word.back() == '\r')) word.pop_back();
    if (word.empty()) continue;
    try {
      corpus.push_back(parse_graph6(word));
    } catch (const std::exception& ex) {
      report.parse_issues.push_back({i + 1, ex.what()});
    }
  }

  std::vector<std::vector<TreePattern>> trees;
  trees.reserve(report.m_values.size());
  for (int m : report.m_values) trees.push_back(enumerate_trees(m));

  std::vector<Instance> instances;
  for (std::size_t gi = 0; gi < corpus.size(); ++gi)
    for (std::size_t mi = 0; mi < report.m_values.size(); ++mi)
      for (std::size_t ti = 0; ti < trees[mi].size(); ++ti)
        instances.push_back({static_cast<int>(gi), &corpus[gi], report.m_values[mi],
                             static_cast<int>(ti), &trees[mi][ti]});

  report.records.resize(instances.size());
  const int thread_count =
      std::max(1, std::min<int>(workers, static_cast<int>(instances.size())));
  if (thread_count <= 1) {
    for (std::size_t i = 0; i < instances.size(); ++i)
      report.records[i] = run_instance(instances[i], k, mode, engine, count_all);
  } else {
    // Contiguous chunks keep the merge a plain index write: no shared state.
    std::vector<std::thread> pool;
    const std::size_t total = instances.size();
    const std::size_t chunk = (total + thread_count - 1) / thread_count;
    for (int w = 0; w < thread_count; ++w) {
      const std::size_t lo = std::min(total, chunk * static_cast<std::size_t>(w));
      const std::size_t hi = std::min(total, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        for (std::size_t i = lo; i < hi; ++i)
          report.records[i] = run_instance(instances[i], k, mode, engine, count_all);
      });
    }
    for (std::thread& th : pool) th.join();
  }

  for (std::size_t i = 0; i < report.records.size(); ++i) {
    if (!report.records[i].agree) report.disagreements.push_back(i);
    if (report.records[i].counterexample) report.counterexamples.push_back(i);
  }
  return report;
}

}  // namespace keep3
