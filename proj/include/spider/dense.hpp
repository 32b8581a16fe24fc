#pragma once

#include <utility>
#include <vector>

#include "spider/graph.hpp"

namespace spider {

struct Removal {
  Vertex vertex;  // original label
  int degree;     // degree in the current subgraph when removed
};

/// Connected induced subgraph H with 2e(H) > |V(H)|(k-1) and every degree
/// at least ceil(k/2).
struct PeelResult {
  Graph subgraph;
  std::vector<Vertex> to_new;  // original -> H index, -1 when removed
  std::vector<Vertex> to_old;  // H index -> original
  std::vector<Removal> removed;
};

/// Repeatedly deletes the lowest-index vertex of degree <= floor((k-1)/2); when
/// the remainder is disconnected, keeps the component maximizing 2e - (k-1)n
/// (ties: more vertices, then lowest minimum label) and continues.
/// Throws PreconditionError when g does not satisfy the threshold or k < 2.
PeelResult minimal_dense_subgraph(const Graph& g, int k);

}  // namespace spider
