#include <algorithm>
#include <cstdio>
#include <string>

#include "spider/scan.hpp"

namespace spider {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw PreconditionError("Rng::below needs a positive bound");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  for (;;) {
    std::uint64_t x = next();
    if (x < limit) return x % bound;
  }
}

std::string graph_id(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

}  // namespace

Graph gen_random_dense(int n, int k, std::uint64_t seed) {
  if (k < 1 || n <= k) throw PreconditionError("gen_random_dense needs n >= k + 1");
  const std::int64_t m = static_cast<std::int64_t>(n) * (k - 1) / 2 + 1;
  auto pairs = all_pairs(n);
  Rng rng(seed);
  rng.shuffle(pairs);
  pairs.resize(static_cast<std::size_t>(m));
  return Graph(n, pairs);
}

HamiltonianInstance gen_hamiltonian(int n, int extra_edges, std::uint64_t seed) {
  if (n < 3) throw PreconditionError("gen_hamiltonian needs n >= 3");
  const std::int64_t chords = static_cast<std::int64_t>(n) * (n - 1) / 2 - n;
  if (extra_edges < 0 || extra_edges > chords)
    throw PreconditionError("gen_hamiltonian: extra_edges must lie in [0, " + std::to_string(chords) + "]");
  Rng rng(seed);
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  rng.shuffle(perm);

  std::vector<char> taken(static_cast<std::size_t>(n) * n, 0);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    Vertex a = perm[i], b = perm[(i + 1) % n];
    edges.emplace_back(a, b);
    taken[a * n + b] = taken[b * n + a] = 1;
  }
  std::vector<Edge> candidates;
  for (auto [u, v] : all_pairs(n))
    if (!taken[u * n + v]) candidates.emplace_back(u, v);
  rng.shuffle(candidates);
  edges.insert(edges.end(), candidates.begin(), candidates.begin() + extra_edges);

  HamiltonianInstance out{Graph(n, edges), CycleCert{perm, perm[0], false}};
  return out;
}

Graph gen_two_connected(int n, std::int64_t m, std::uint64_t seed) {
  if (n < 3 || m < n || m > static_cast<std::int64_t>(n) * (n - 1) / 2)
    throw PreconditionError("gen_two_connected needs n >= 3 and n <= m <= n(n-1)/2");
  auto inst = gen_hamiltonian(n, static_cast<int>(m - n), seed);
  if (!is_two_connected(inst.graph)) throw std::logic_error("planted cycle graph is not 2-connected");
  return std::move(inst.graph);
}

std::uint64_t enumerate_labeled_graphs(int n, const std::function<bool(const Graph&)>& keep,
                                       const std::function<void(const Graph&)>& visit) {
  if (n < 0 || n > 8) throw PreconditionError("enumerate_labeled_graphs supports n <= 8");
  const auto pairs = all_pairs(n);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  std::uint64_t visited = 0;
  std::vector<Edge> edges;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    Graph g(n, edges);
    if (keep && !keep(g)) continue;
    ++visited;
    if (visit) visit(g);
  }
  return visited;
}

}  // namespace spider
