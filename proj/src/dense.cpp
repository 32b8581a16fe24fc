#include "spider/dense.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spider {

namespace {

struct Component {
  std::vector<Vertex> members;
  std::int64_t edges = 0;
};

std::vector<Component> components(const Graph& g, const std::vector<char>& alive,
                                  const std::vector<int>& degree) {
  std::vector<Component> out;
  std::vector<char> seen(g.order(), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (!alive[s] || seen[s]) continue;
    Component c;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    std::int64_t degree_sum = 0;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      c.members.push_back(u);
      degree_sum += degree[u];
      for (Vertex w : g.neighbors(u))
        if (alive[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    c.edges = degree_sum / 2;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

PeelResult minimal_dense_subgraph(const Graph& g, int k) {
  if (k < 2) throw PreconditionError("minimal_dense_subgraph needs k >= 2");
  if (!exceeds_threshold(g, k))
    throw PreconditionError("graph does not satisfy 2m > n(k-1) for k = " + std::to_string(k));

  const int n = g.order();
  const int limit = (k - 1) / 2;
  std::vector<char> alive(n, 1);
  std::vector<int> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::int64_t vertices = n;
  std::int64_t edges = g.size();

  PeelResult result;
  auto remove = [&](Vertex v) {
    result.removed.push_back({v, degree[v]});
    alive[v] = 0;
    --vertices;
    edges -= degree[v];
    for (Vertex w : g.neighbors(v))
      if (alive[w]) --degree[w];
  };

  for (;;) {
    // Lowest eligible index first; a removal can only make lower indices
    // eligible again, so restart the scan from the removed neighbor's minimum.
    Vertex v = 0;
    while (v < n) {
      if (alive[v] && degree[v] <= limit) {
        remove(v);
        if (2 * edges <= vertices * (k - 1)) throw std::logic_error("peeling step lost the density threshold");
        Vertex restart = v;
        for (Vertex w : g.neighbors(v))
          if (alive[w] && w < restart) restart = w;
        v = restart;
        continue;
      }
      ++v;
    }

    auto comps = components(g, alive, degree);
    if (comps.size() <= 1) break;
    auto score = [&](const Component& c) {
      return 2 * c.edges - static_cast<std::int64_t>(k - 1) * static_cast<std::int64_t>(c.members.size());
    };
    std::size_t best = 0;
    for (std::size_t i = 1; i < comps.size(); ++i) {
      auto si = score(comps[i]), sb = score(comps[best]);
      if (si > sb || (si == sb && comps[i].members.size() > comps[best].members.size())) best = i;
      // equal score and size: components are discovered in order of their minimum label
    }
    std::vector<char> keep(n, 0);
    for (Vertex v2 : comps[best].members) keep[v2] = 1;
    for (Vertex u = 0; u < n; ++u)
      if (alive[u] && !keep[u]) remove(u);
    if (2 * edges <= vertices * (k - 1))
      throw std::logic_error("peeling lost the density threshold");
  }

  std::vector<Vertex> kept;
  for (Vertex v = 0; v < n; ++v)
    if (alive[v]) kept.push_back(v);
  auto sub = induced_subgraph(g, kept);
  result.subgraph = std::move(sub.graph);
  result.to_new = std::move(sub.to_new);
  result.to_old = std::move(sub.to_old);
  return result;
}

}  // namespace spider
