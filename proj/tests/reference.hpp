#pragma once

// Naive reference implementations used only by the tests. None of them share
// code paths with the library's searches.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "spider/graph.hpp"
#include "spider/spider.hpp"

namespace spider::reference {

/// Adjacency matrix copy, so membership tests never touch Graph::has_edge.
inline std::vector<std::vector<char>> matrix(const Graph& g) {
  std::vector<std::vector<char>> a(g.order(), std::vector<char>(g.order(), 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  return a;
}

/// Checks a certificate by collecting every vertex and every edge and
/// comparing all pairs.
inline bool naive_valid(const Graph& g, const SpiderShape& shape, const SpiderEmbedding& emb) {
  auto a = matrix(g);
  const int n = g.order();
  if (emb.root < 0 || emb.root >= n) return false;
  if (emb.legs.size() != shape.legs().size()) return false;
  std::vector<Vertex> all{emb.root};
  std::multiset<int> lengths;
  for (const auto& leg : emb.legs) {
    if (leg.empty() || leg[0] != emb.root) return false;
    lengths.insert(static_cast<int>(leg.size()) - 1);
    for (std::size_t i = 1; i < leg.size(); ++i) {
      if (leg[i] < 0 || leg[i] >= n) return false;
      if (!a[leg[i - 1]][leg[i]]) return false;
      all.push_back(leg[i]);
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (all[i] == all[j]) return false;
  std::multiset<int> expected(shape.legs().begin(), shape.legs().end());
  return lengths == expected && static_cast<int>(all.size()) == shape.size() + 1;
}

/// Enumerates every simple path from v (no pruning) and returns the longest
/// cycle length through v, 0 when none.
inline int brute_max_cycle_through(const Graph& g, Vertex v) {
  auto a = matrix(g);
  const int n = g.order();
  int best = 0;
  std::vector<char> used(n, 0);
  std::function<void(Vertex, int)> walk = [&](Vertex end, int len) {
    if (len >= 3 && a[end][v]) best = std::max(best, len);
    for (Vertex w = 0; w < n; ++w)
      if (a[end][w] && !used[w]) {
        used[w] = 1;
        walk(w, len + 1);
        used[w] = 0;
      }
  };
  used[v] = 1;
  walk(v, 1);
  return best;
}

inline bool brute_hamiltonian(const Graph& g) {
  if (g.order() < 3) return false;
  return brute_max_cycle_through(g, 0) == g.order();
}

/// Longest path from v avoiding `forbidden` (v itself exempt), by plain enumeration.
inline int brute_max_path(const Graph& g, Vertex v, const std::vector<Vertex>& forbidden) {
  auto a = matrix(g);
  const int n = g.order();
  std::vector<char> used(n, 0);
  for (Vertex f : forbidden) used[f] = 1;
  used[v] = 1;
  int best = 0;
  std::function<void(Vertex, int)> walk = [&](Vertex end, int len) {
    best = std::max(best, len);
    for (Vertex w = 0; w < n; ++w)
      if (a[end][w] && !used[w]) {
        used[w] = 1;
        walk(w, len + 1);
        used[w] = 0;
      }
  };
  walk(v, 0);
  return best;
}

/// Removes each vertex in turn and checks connectivity of the rest.
inline bool brute_two_connected(const Graph& g) {
  const int n = g.order();
  if (n < 3 || !is_connected(g)) return false;
  for (Vertex cut = 0; cut < n; ++cut) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
      if (v != cut) keep.push_back(v);
    if (!is_connected(induced_subgraph(g, keep).graph)) return false;
  }
  return true;
}

/// Spider as a rooted tree: vertex 0 is the root, parent[i] < i. Tree vertices
/// are mapped one at a time onto unused graph vertices adjacent to the image
/// of their parent, trying every graph vertex for every tree vertex.
inline bool naive_contains_spider(const Graph& g, const SpiderShape& shape) {
  std::vector<int> parent{-1};
  for (int len : shape.legs()) {
    int prev = 0;
    for (int j = 0; j < len; ++j) {
      parent.push_back(prev);
      prev = static_cast<int>(parent.size()) - 1;
    }
  }
  const int t = static_cast<int>(parent.size());
  const int n = g.order();
  if (t > n) return false;
  auto a = matrix(g);
  std::vector<Vertex> image(t, -1);
  std::vector<char> used(n, 0);
  std::function<bool(int)> place = [&](int i) {
    if (i == t) return true;
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      if (i > 0 && !a[image[parent[i]]][v]) continue;
      used[v] = 1;
      image[i] = v;
      if (place(i + 1)) return true;
      used[v] = 0;
    }
    return false;
  };
  return place(0);
}

/// p(k, parts) by the recurrence p(n, j) = p(n-1, j-1) + p(n-j, j).
inline std::int64_t partition_count(int k, int parts = 0) {
  std::vector<std::vector<std::int64_t>> p(k + 1, std::vector<std::int64_t>(k + 1, 0));
  p[0][0] = 1;
  for (int n = 1; n <= k; ++n)
    for (int j = 1; j <= n; ++j) p[n][j] = p[n - 1][j - 1] + p[n - j][j];
  if (parts > 0) return p[k][parts];
  std::int64_t total = 0;
  for (int j = 1; j <= k; ++j) total += p[k][j];
  return total;
}

/// max over nonempty vertex subsets of 2e - (k-1)|S|, with the maximizing subsets.
inline std::pair<std::int64_t, std::vector<std::vector<Vertex>>> best_density_subsets(const Graph& g, int k) {
  const int n = g.order();
  auto a = matrix(g);
  std::int64_t best = INT64_MIN;
  std::vector<std::vector<Vertex>> arg;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    std::int64_t e = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) e += a[s[i]][s[j]];
    std::int64_t score = 2 * e - static_cast<std::int64_t>(k - 1) * static_cast<std::int64_t>(s.size());
    if (score > best) {
      best = score;
      arg.clear();
    }
    if (score == best) arg.push_back(s);
  }
  return {best, arg};
}

}  // namespace spider::reference
