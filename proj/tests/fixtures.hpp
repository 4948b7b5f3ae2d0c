#pragma once

// Small named graphs shared across the test files.

#include <vector>

#include "keep3/graph.hpp"

namespace fixtures {

using keep3::Edge;
using keep3::Graph;

inline Graph petersen() {
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
    es.emplace_back(i, i + 5);
  }
  return Graph(10, es);
}

inline Graph q3() {
  // 3-cube: vertices are the bit triples, edges join at Hamming distance 1.
  std::vector<Edge> es;
  for (int v = 0; v < 8; ++v)
    for (int b = 0; b < 3; ++b)
      if (!(v >> b & 1)) es.emplace_back(v, v | 1 << b);
  return Graph(8, es);
}

inline Graph cycle(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, es);
}

inline Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

// Two degree-3 vertices joined by three internally disjoint 2-edge paths.
inline Graph theta_graph() {
  return Graph(5, {Edge(0, 2), Edge(1, 2), Edge(0, 3), Edge(1, 3), Edge(0, 4), Edge(1, 4)});
}

// K4 on 0..3 with edges 0-1 and 2-3 subdivided through 4 and 5.
inline Graph subdivided_k4() {
  return Graph(6, {Edge(0, 4), Edge(1, 4), Edge(0, 2), Edge(0, 3), Edge(1, 2), Edge(1, 3),
                   Edge(2, 5), Edge(3, 5)});
}

// Two triangles sharing vertex 2.
inline Graph bowtie() {
  return Graph(5, {Edge(0, 1), Edge(0, 2), Edge(1, 2), Edge(2, 3), Edge(2, 4), Edge(3, 4)});
}

}  // namespace fixtures
