#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "keep3/connectivity.hpp"
#include "keep3/graph.hpp"
#include "keep3/randgraph.hpp"
#include "keep3/skeleton.hpp"
#include "oracles.hpp"

using namespace keep3;

namespace {

// Host used by the move tests: a K4 on 0..3 whose 0-1 edge runs through the
// long chain 0-4-5-6-1, plus two helper vertices 7 and 8 wired so that every
// move kind has the edges it needs.
Graph move_host() {
  return Graph(9, {Edge(0, 4), Edge(4, 5), Edge(5, 6), Edge(6, 1), Edge(0, 2), Edge(0, 3),
                   Edge(1, 2), Edge(1, 3), Edge(2, 3), Edge(7, 0), Edge(7, 1), Edge(7, 6),
                   Edge(7, 2), Edge(7, 3), Edge(7, 5), Edge(7, 4), Edge(7, 8), Edge(8, 5)});
}

Skeleton base_skeleton() {
  auto b = Skeleton::build(9, {0, 1, 2, 3, 4, 5, 6},
                           {Edge(0, 4), Edge(4, 5), Edge(5, 6), Edge(6, 1), Edge(0, 2),
                            Edge(0, 3), Edge(1, 2), Edge(1, 3), Edge(2, 3)});
  REQUIRE(b.has_value());
  return *b;
}

std::vector<Edge> edge_vector(const Skeleton& b) {
  return {b.edge_set().begin(), b.edge_set().end()};
}

}  // namespace

TEST_SUITE_BEGIN("skeleton");

TEST_CASE("K4 is its own skeleton") {
  const Graph k4 = Graph::complete(4);
  const auto b = Skeleton::build(4, {0, 1, 2, 3}, k4.edges());
  REQUIRE(b.has_value());
  CHECK(b->branch_vertices() == std::vector<int>{0, 1, 2, 3});
  CHECK(b->subdivision_vertices().empty());
  CHECK(b->ears().size() == 6);
  CHECK(b->potential() == Potential{4, -4});
}

TEST_CASE("subdivided K4 keeps its ears straight") {
  const Graph h = fixtures::subdivided_k4();
  const auto b = Skeleton::build(6, {0, 1, 2, 3, 4, 5}, h.edges());
  REQUIRE(b.has_value());
  CHECK(b->branch_vertices() == std::vector<int>{0, 1, 2, 3});
  CHECK(b->subdivision_vertices() == std::vector<int>{4, 5});
  CHECK(b->ears().size() == 6);
  CHECK(b->potential() == Potential{4, -6});
  const Ear& home = b->closed_ear_of(4);
  CHECK(home.contains(4));
  CHECK(home.vertices.size() == 3);  // 0-4-1 including both endpoints
  CHECK(((home.front() == 0 && home.back() == 1) ||
         (home.front() == 1 && home.back() == 0)));
  CHECK(b->degree(4) == 2);
  CHECK(b->degree(0) == 3);
}

TEST_CASE("rejects shapes that are not subdivisions of 3-connected graphs") {
  std::string diag;
  CHECK_FALSE(Skeleton::build(5, {0, 1, 2, 3, 4}, fixtures::theta_graph().edges(), &diag)
                  .has_value());  // two branch vertices only
  CHECK_FALSE(diag.empty());
  CHECK_FALSE(Skeleton::build(5, {0, 1, 2, 3, 4}, fixtures::bowtie().edges()).has_value());
  CHECK_FALSE(Skeleton::build(5, {0, 1, 2, 3, 4}, fixtures::cycle(5).edges()).has_value());
  CHECK_FALSE(Skeleton::build(4, {0, 1, 2, 3},
                              {Edge(0, 1), Edge(1, 2), Edge(2, 3)}).has_value());
  // Disconnected union of two K4s.
  std::vector<Edge> two;
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) {
      two.emplace_back(u, v);
      two.emplace_back(u + 4, v + 4);
    }
  CHECK_FALSE(Skeleton::build(8, {0, 1, 2, 3, 4, 5, 6, 7}, two).has_value());
  // Edge endpoint outside the listed vertex set.
  CHECK_FALSE(Skeleton::build(5, {0, 1, 2, 3}, {Edge(0, 1), Edge(1, 2), Edge(2, 3),
                                                Edge(0, 2), Edge(0, 4), Edge(1, 3)})
                  .has_value());
}

TEST_CASE("potential ordering is lexicographic") {
  CHECK(Potential{4, -7} < Potential{5, -9});
  CHECK(Potential{4, -7} < Potential{4, -6});
  CHECK_FALSE(Potential{5, -9} < Potential{4, -4});
}

TEST_CASE("attach_vertex_move grows the branch count") {
  const Skeleton b = base_skeleton();
  const auto after = attach_vertex_move(b, 7, {2, 3, 5});
  REQUIRE(after.has_value());
  CHECK(after->potential() > b.potential());
  CHECK(after->potential().branch_count == 6);  // 7 joins, 5 is promoted
  CHECK(after->has_vertex(7));
  CHECK(oracles::brute_valid_skeleton(move_host(), after->vertices(), edge_vector(*after)));

  std::string diag;
  CHECK_FALSE(attach_vertex_move(b, 7, {0, 4, 6}, &diag).has_value());  // one closed ear
  CHECK_FALSE(diag.empty());
  CHECK_FALSE(attach_vertex_move(b, 7, {2, 3}).has_value());  // too few points
  CHECK_FALSE(attach_vertex_move(b, 5, {2, 3, 6}).has_value());  // already inside
}

TEST_CASE("shortcut_ear_move trades interior vertices for one") {
  const Skeleton b = base_skeleton();
  int ear_index = -1;
  for (std::size_t i = 0; i < b.ears().size(); ++i)
    if (b.ears()[i].vertices.size() == 5) ear_index = static_cast<int>(i);
  REQUIRE(ear_index >= 0);  // the 0-4-5-6-1 chain

  const Ear& ear = b.ears()[ear_index];
  const bool forward = ear.front() == 0;
  SUBCASE("span of three") {
    const int p = forward ? 0 : 1, q = forward ? 3 : 4;
    const auto after = shortcut_ear_move(b, 7, ear_index, p, q);
    REQUIRE(after.has_value());
    CHECK(after->potential() > b.potential());
    CHECK(after->potential().branch_count == 4);
    CHECK(static_cast<int>(after->vertices().size()) ==
          static_cast<int>(b.vertices().size()) - 1);
    CHECK(after->has_vertex(7));
    CHECK(after->degree(7) == 2);
    CHECK(oracles::brute_valid_skeleton(move_host(), after->vertices(),
                                        edge_vector(*after)));
  }
  SUBCASE("span of the whole ear drops two vertices") {
    const auto after = shortcut_ear_move(b, 7, ear_index, 0, 4);
    REQUIRE(after.has_value());
    CHECK(static_cast<int>(after->vertices().size()) ==
          static_cast<int>(b.vertices().size()) - 2);
    CHECK(after->potential().branch_count == 4);
    CHECK(oracles::brute_valid_skeleton(move_host(), after->vertices(),
                                        edge_vector(*after)));
  }
  SUBCASE("short spans are rejected") {
    std::string diag;
    CHECK_FALSE(shortcut_ear_move(b, 7, ear_index, 0, 2, &diag).has_value());
    CHECK_FALSE(diag.empty());
    CHECK_FALSE(shortcut_ear_move(b, 7, ear_index, 2, 3).has_value());
  }
}

TEST_CASE("attach_fan_move splices a three-path fan") {
  const Skeleton b = base_skeleton();
  Fan fan;
  fan.center = 7;
  fan.paths = {{7, 2}, {7, 3}, {7, 8, 5}};
  const auto after = attach_fan_move(b, fan);
  REQUIRE(after.has_value());
  CHECK(after->potential() > b.potential());
  CHECK(after->has_vertex(7));
  CHECK(after->has_vertex(8));
  CHECK(after->degree(7) == 3);
  CHECK(after->degree(8) == 2);
  CHECK(oracles::brute_valid_skeleton(move_host(), after->vertices(), edge_vector(*after)));

  Fan bad = fan;
  bad.paths[2] = {7, 5};
  bad.paths[1] = {7, 5};  // duplicate endpoint
  CHECK_FALSE(attach_fan_move(b, bad).has_value());
  Fan inside = fan;
  inside.paths[2] = {7, 4, 5};  // interior vertex 4 already lies in B
  CHECK_FALSE(attach_fan_move(b, inside).has_value());
}

TEST_CASE("attach_path_move bridges out of a closed ear") {
  const Skeleton b = base_skeleton();
  const auto after = attach_path_move(b, {4, 7, 2});
  REQUIRE(after.has_value());
  CHECK(after->potential() > b.potential());
  CHECK(after->potential().branch_count == 5);  // 4 is promoted
  CHECK(after->degree(4) == 3);
  CHECK(oracles::brute_valid_skeleton(move_host(), after->vertices(), edge_vector(*after)));

  std::string diag;
  CHECK_FALSE(attach_path_move(b, {4, 7, 0}, &diag).has_value());  // same closed ear
  CHECK_FALSE(diag.empty());
  CHECK_FALSE(attach_path_move(b, {0, 7, 2}).has_value());  // start is a branch vertex
  CHECK_FALSE(attach_path_move(b, {4, 5}).has_value());     // end inside the same ear
}

TEST_CASE("contains_k4_subdivision on named graphs") {
  CHECK(contains_k4_subdivision(Graph::complete(4)));
  CHECK(contains_k4_subdivision(Graph::complete(5)));
  CHECK(contains_k4_subdivision(fixtures::petersen()));
  CHECK(contains_k4_subdivision(fixtures::q3()));
  CHECK(contains_k4_subdivision(fixtures::subdivided_k4()));
  CHECK_FALSE(contains_k4_subdivision(fixtures::theta_graph()));
  CHECK_FALSE(contains_k4_subdivision(fixtures::bowtie()));
  CHECK_FALSE(contains_k4_subdivision(fixtures::cycle(9)));
  CHECK_FALSE(contains_k4_subdivision(fixtures::path_graph(6)));
  CHECK_FALSE(contains_k4_subdivision(Graph::complete(3)));
  CHECK_FALSE(contains_k4_subdivision(Graph(0)));
}

TEST_CASE("contains_k4_subdivision agrees with the minor brute force") {
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    std::vector<Edge> es;
    int bit = 0;
    for (int u = 0; u < 5; ++u)
      for (int v = u + 1; v < 5; ++v, ++bit)
        if (mask >> bit & 1) es.emplace_back(u, v);
    const Graph g(5, es);
    CAPTURE(mask);
    CHECK(contains_k4_subdivision(g) == oracles::brute_k4_subdivision(g));
  }
  std::mt19937 rng(606);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 6 + static_cast<int>(rng_below(rng, 3));
    const Graph g =
        oracles::random_mask_graph(n, 20 + static_cast<int>(rng_below(rng, 50)), rng);
    CAPTURE(encode_graph6(g));
    CHECK(contains_k4_subdivision(g) == oracles::brute_k4_subdivision(g));
  }
}

TEST_CASE("initial_skeleton finds an edge-minimal certificate") {
  CHECK_FALSE(initial_skeleton(fixtures::cycle(5)).has_value());
  CHECK_FALSE(initial_skeleton(fixtures::theta_graph()).has_value());

  const auto k4 = initial_skeleton(Graph::complete(4));
  REQUIRE(k4.has_value());
  CHECK(k4->vertices().size() == 4);
  CHECK(k4->edge_set().size() == 6);

  std::mt19937 rng(707);
  int built = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 5 + static_cast<int>(rng_below(rng, 6));
    const Graph g =
        oracles::random_mask_graph(n, 30 + static_cast<int>(rng_below(rng, 55)), rng);
    const auto b = initial_skeleton(g);
    CHECK(b.has_value() == contains_k4_subdivision(g));
    if (!b) continue;
    ++built;
    for (const Edge& e : b->edge_set()) CHECK(g.adjacent(e.u, e.v));
    CHECK(oracles::brute_valid_skeleton(g, b->vertices(), edge_vector(*b)));
    // Minimality: removing any single edge kills every K4 subdivision.
    for (const Edge& gone : b->edge_set()) {
      std::vector<Edge> fewer;
      for (const Edge& e : b->edge_set())
        if (!(e == gone)) fewer.push_back(e);
      CHECK_FALSE(contains_k4_subdivision(Graph(g.order(), fewer)));
    }
  }
  CHECK(built > 20);

  const auto pet = initial_skeleton(fixtures::petersen());
  REQUIRE(pet.has_value());
  CHECK(oracles::brute_valid_skeleton(fixtures::petersen(), pet->vertices(),
                                      edge_vector(*pet)));
  CHECK(pet->subdivision_vertices().size() > 0);  // girth 5 forces long ears
}

TEST_CASE("build agrees with the brute-force validator on random subgraphs") {
  std::mt19937 rng(909);
  int valid_seen = 0;
  for (int graph_i = 0; graph_i < 40; ++graph_i) {
    const Graph g = oracles::random_mask_graph(8, 55 + static_cast<int>(rng_below(rng, 35)),
                                               rng);
    const std::vector<Edge> all = g.edges();
    for (int sub = 0; sub < 60; ++sub) {
      std::vector<Edge> chosen;
      for (const Edge& e : all)
        if (rng_below(rng, 100) < 70) chosen.push_back(e);
      std::set<int> vs;
      for (const Edge& e : chosen) {
        vs.insert(e.u);
        vs.insert(e.v);
      }
      const std::vector<int> vertices(vs.begin(), vs.end());
      if (vertices.empty()) continue;
      const auto built = Skeleton::build(8, vertices, chosen);
      const bool brute = oracles::brute_valid_skeleton(g, vertices, chosen);
      CAPTURE(encode_graph6(g));
      CHECK(built.has_value() == brute);
      if (built) {
        ++valid_seen;
        CHECK(built->potential().branch_count ==
              static_cast<int>(built->branch_vertices().size()));
      }
    }
  }
  CHECK(valid_seen > 50);  // the sweep must hit genuinely valid skeletons
}

TEST_SUITE_END();
