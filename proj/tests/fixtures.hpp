#pragma once

#include <vector>

#include "spider/graph.hpp"

namespace spider::fixtures {

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

inline Graph petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    e.emplace_back(i, i + 5);                // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, e);
}

/// K4 on 0..3 with vertex 4 hanging off vertex 0.
inline Graph k4_pendant() { return Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}}); }

/// Triangles 0-1-2 and 0-3-4 sharing vertex 0.
inline Graph bowtie() { return Graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}); }

/// K4 on {0,1,2,3} and K4 on {3,4,5,6}, sharing vertex 3.
inline Graph two_k4_shared() {
  std::vector<Edge> e;
  for (int base : {0, 3})
    for (int u = base; u < base + 4; ++u)
      for (int v = u + 1; v < base + 4; ++v) e.emplace_back(u, v);
  return Graph(7, e);
}

/// C6 plus chords from 0 to every other vertex.
inline Graph fan6() {
  std::vector<Edge> e;
  for (int i = 0; i < 6; ++i) e.emplace_back(i, (i + 1) % 6);
  for (int i = 2; i <= 4; ++i) e.emplace_back(0, i);
  return Graph(6, e);
}

/// K_clique joined to an independent set of size `independent`: every
/// independent vertex sees every clique vertex. 2-connected, and not
/// hamiltonian once independent > clique.
inline Graph clique_join_independent(int clique, int independent) {
  std::vector<Edge> e;
  for (int u = 0; u < clique; ++u)
    for (int v = u + 1; v < clique; ++v) e.emplace_back(u, v);
  for (int i = 0; i < independent; ++i)
    for (int u = 0; u < clique; ++u) e.emplace_back(u, clique + i);
  return Graph(clique + independent, e);
}

}  // namespace spider::fixtures
