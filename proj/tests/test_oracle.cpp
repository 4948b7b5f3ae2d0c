#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "keep3/connectivity.hpp"
#include "keep3/graph.hpp"
#include "keep3/oracle.hpp"
#include "keep3/randgraph.hpp"
#include "keep3/search.hpp"
#include "keep3/tree.hpp"
#include "oracles.hpp"

using namespace keep3;

namespace {

TreePattern random_tree(int m, std::mt19937& rng) {
  std::vector<Edge> es;
  for (int v = 1; v < m; ++v)
    es.emplace_back(v, static_cast<int>(rng_below(rng, static_cast<std::uint32_t>(v))));
  return TreePattern::from_edges(m, es);
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("embedding counts match hand values and a reversed-order recount") {
    CHECK(count_tree_embeddings(Graph::complete(3), TreePattern::path(3)) == 6);
    CHECK(count_tree_embeddings(Graph::complete(4), TreePattern::path(4)) == 24);
    CHECK(count_tree_embeddings(Graph::complete(4), TreePattern::star(4)) == 24);
    CHECK(count_tree_embeddings(fixtures::cycle(4), TreePattern::star(4)) == 0);
    CHECK(count_tree_embeddings(Graph::complete(3), TreePattern::path(1)) == 3);
    CHECK(count_tree_embeddings(Graph::complete(3), TreePattern::path(4)) == 0);

    std::mt19937 rng(911);
    for (int trial = 0; trial < 40; ++trial) {
      int n = 4 + static_cast<int>(rng_below(rng, 4));
      Graph g = oracles::random_mask_graph(n, 60, rng);
      TreePattern t = random_tree(1 + static_cast<int>(rng_below(rng, 5u)), rng);
      CHECK(count_tree_embeddings(g, t) == oracles::count_embeddings_reversed(g, t));
    }
  }

  TEST_CASE("the enumeration stops when the visitor says so") {
    Graph k4 = Graph::complete(4);
    TreePattern p3 = TreePattern::path(3);
    int seen = 0;
    bool stopped = enumerate_tree_embeddings(k4, p3, [&](const Embedding&) {
      ++seen;
      return false;  // stop after the first one
    });
    CHECK(stopped);
    CHECK(seen == 1);

    seen = 0;
    stopped = enumerate_tree_embeddings(k4, p3, [&](const Embedding&) {
      ++seen;
      return true;  // keep going
    });
    CHECK(!stopped);
    CHECK(seen == count_tree_embeddings(k4, p3));
  }

  TEST_CASE("exhaustion certifies absence and dense hosts yield witnesses") {
    CHECK(!oracle_find(Graph::complete(4), TreePattern::path(3), Mode::vertex).has_value());
    CHECK(count_removable_embeddings(Graph::complete(4), TreePattern::path(3), Mode::vertex) == 0);

    Graph k6 = Graph::complete(6);
    TreePattern p3 = TreePattern::path(3);
    for (Mode mode : {Mode::vertex, Mode::edge}) {
      std::optional<Embedding> found = oracle_find(k6, p3, mode);
      REQUIRE(found.has_value());
      CHECK(verify_removal(k6, p3, *found, mode));
    }
    CHECK(count_removable_embeddings(k6, p3, Mode::vertex) > 0);

    // the threshold parameter is honoured
    CHECK(oracle_find(Graph::complete(5), p3, Mode::vertex, 2).has_value());
    CHECK(!oracle_find(k6, p3, Mode::vertex, 4).has_value());
    CHECK(oracle_find(Graph::complete(7), p3, Mode::vertex, 4).has_value());
  }

  TEST_CASE("labeled enumeration pins the dense corners and rejects big orders") {
    std::vector<std::string> words;
    enumerate_graphs_labeled(6, 5, 3, Mode::vertex,
                             [&](const Graph& g) { words.push_back(encode_graph6(g)); });
    CHECK(words == std::vector<std::string>{encode_graph6(Graph::complete(6))});

    words.clear();
    enumerate_graphs_labeled(7, 6, 3, Mode::edge,
                             [&](const Graph& g) { words.push_back(encode_graph6(g)); });
    CHECK(words == std::vector<std::string>{encode_graph6(Graph::complete(7))});

    // independent recount over all 5-vertex adjacency masks
    std::set<std::string> seen;
    enumerate_graphs_labeled(5, 3, 3, Mode::vertex,
                             [&](const Graph& g) { seen.insert(encode_graph6(g)); });
    std::set<std::string> expected;
    for (unsigned mask = 0; mask < (1u << 10); ++mask) {
      std::vector<Edge> es;
      int bit = 0;
      for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v, ++bit)
          if (mask >> bit & 1u) es.push_back(Edge{u, v});
      Graph g(5, es);
      if (min_degree(g) < 3) continue;
      if (!oracles::brute_vertex_connectivity_at_least(g, 3)) continue;
      expected.insert(encode_graph6(g));
    }
    CHECK(seen == expected);
    CHECK(!seen.empty());

    words.clear();
    enumerate_graphs_labeled(2, 0, 1, Mode::vertex,
                             [&](const Graph& g) { words.push_back(encode_graph6(g)); });
    CHECK(words == std::vector<std::string>{encode_graph6(Graph(2, {{0, 1}}))});

    CHECK_THROWS_AS(enumerate_graphs_labeled(8, 0, 1, Mode::vertex, [](const Graph&) {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(enumerate_graphs_labeled(-1, 0, 1, Mode::vertex, [](const Graph&) {}),
                    std::invalid_argument);
  }

  TEST_CASE("exploration is deterministic across worker counts") {
    std::vector<std::string> corpus = {
        encode_graph6(Graph::complete(6)),
        encode_graph6(Graph::complete(7)),
        encode_graph6(fixtures::cycle(5)),
        encode_graph6(Graph::complete(4)),
        "!!",  // not a graph6 word
    };
    ExploreReport one = explore(corpus, {3, 4}, 3, Mode::vertex, Engine::both, 1);
    ExploreReport four = explore(corpus, {4, 3}, 3, Mode::vertex, Engine::both, 4);

    REQUIRE(one.records.size() == 12);  // 4 graphs x (one m=3 tree + two m=4 trees)
    REQUIRE(four.records.size() == one.records.size());
    for (std::size_t i = 0; i < one.records.size(); ++i)
      CHECK(one.records[i].format() == four.records[i].format());

    REQUIRE(one.parse_issues.size() == 1);
    CHECK(one.parse_issues[0].line == 5);
    CHECK(!one.parse_issues[0].message.empty());

    CHECK(one.counterexamples.empty());
    CHECK(one.disagreements.empty());
    for (const ExploreRecord& r : one.records) {
      CHECK(r.agree);
      CHECK(!r.counterexample);
      CHECK(r.bundle.empty());
      CHECK((r.finder == "ok") == (r.oracle == "found"));
      CHECK(r.format().find("record graph=") == 0);
    }

    // the dense hosts satisfy the hypotheses, the thin ones do not
    CHECK(one.records[0].hypotheses);    // complete on six, m = 3
    CHECK(!one.records[1].hypotheses);   // complete on six, m = 4 needs degree 6
    CHECK(one.records[3].hypotheses);    // complete on seven, m = 3
    CHECK(one.records[4].hypotheses);    // complete on seven, m = 4
    for (std::size_t i = 6; i < 12; ++i) CHECK(!one.records[i].hypotheses);

    CHECK(one.summary().find("instances=12") != std::string::npos);
    CHECK(one.summary().find("counterexamples=0") != std::string::npos);
  }

  TEST_CASE("engine selection skips the other side") {
    std::vector<std::string> corpus = {encode_graph6(Graph::complete(6))};

    ExploreReport finder_only = explore(corpus, {3}, 3, Mode::vertex, Engine::finder, 1);
    REQUIRE(finder_only.records.size() == 1);
    CHECK(finder_only.records[0].finder == "ok");
    CHECK(finder_only.records[0].oracle == "skip");
    CHECK(finder_only.records[0].agree);

    ExploreReport oracle_only = explore(corpus, {3}, 3, Mode::vertex, Engine::oracle, 1);
    REQUIRE(oracle_only.records.size() == 1);
    CHECK(oracle_only.records[0].finder == "skip");
    CHECK(oracle_only.records[0].oracle == "found");

    // the finder machinery is pinned to threshold three
    ExploreReport k4 = explore({encode_graph6(Graph::complete(7))}, {3}, 4, Mode::vertex,
                               Engine::both, 1);
    REQUIRE(k4.records.size() == 1);
    CHECK(k4.records[0].finder == "skip");
    CHECK(k4.records[0].oracle == "found");
    CHECK(k4.records[0].hypotheses);  // minimum degree 6 with k=4, m=3
    CHECK(!k4.records[0].counterexample);
  }

  TEST_CASE("requesting counts fills the removable totals") {
    std::vector<std::string> corpus = {encode_graph6(Graph::complete(6)),
                                       encode_graph6(Graph::complete(4))};
    ExploreReport rep = explore(corpus, {3}, 3, Mode::vertex, Engine::oracle, 2, true);
    REQUIRE(rep.records.size() == 2);
    for (const ExploreRecord& r : rep.records) {
      Graph g = parse_graph6(r.graph6);
      CHECK(r.removable_count ==
            count_removable_embeddings(g, TreePattern::path(3), Mode::vertex, 3));
      CHECK(r.format().find("count=") != std::string::npos);
    }
    CHECK(rep.records[0].removable_count > 0);
    CHECK(rep.records[1].removable_count == 0);
  }

  TEST_CASE("tree instances follow the catalogue order") {
    ExploreReport rep = explore({encode_graph6(Graph::complete(6))}, {5}, 3, Mode::vertex,
                                Engine::oracle, 1);
    std::vector<TreePattern> trees = enumerate_trees(5);
    REQUIRE(rep.records.size() == trees.size());
    for (std::size_t i = 0; i < rep.records.size(); ++i) {
      CHECK(rep.records[i].m == 5);
      CHECK(rep.records[i].tree_index == static_cast<int>(i));
    }
  }
}
