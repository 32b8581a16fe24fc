// Property suites over seeded and exhaustive graph families. One line per
// suite; exit status is nonzero when any suite fails.
#include <chrono>
#include <cstdio>
#include <map>
#include <string>

#include "reference.hpp"
#include "spider/dense.hpp"
#include "spider/embed.hpp"
#include "spider/scan.hpp"

using namespace spider;

namespace {

struct Line {
  bool ok = true;
  std::string detail;
  std::string example;  // first failing instance
  void fail(const std::string& what) {
    if (ok) example = what;
    ok = false;
  }
};

int failures = 0;

template <class F>
void suite(const char* name, F body) {
  const auto t0 = std::chrono::steady_clock::now();
  Line line = body();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s %-18s %s (%.1f s)\n", line.ok ? "PASS" : "FAIL", name, line.detail.c_str(), secs);
  if (!line.ok) {
    std::printf("     first failure: %s\n", line.example.c_str());
    ++failures;
  }
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Vertex max_degree_vertex(const Graph& g) {
  Vertex x0 = 0;
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) > g.degree(x0)) x0 = v;
  return x0;
}

Line hamiltonian_suite() {
  Line line;
  Rng rng(1001);
  long runs = 0, embedded = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = rng.between(5, 14);
    const int extra = rng.between(0, n * (n - 3) / 2);
    auto inst = gen_hamiltonian(n, extra, rng.next());
    const Vertex x0 = max_degree_vertex(inst.graph);
    const auto cycle = rotated_to(inst.cycle, x0);
    const int kmax = std::min(8, inst.graph.degree(x0));
    for (int k = 2; k <= kmax; ++k)
      for (const auto& shape : enumerate_shapes(k)) {
        ++runs;
        auto out = embed_in_hamiltonian(inst.graph, cycle, x0, shape);
        if (out.embedded() && out.embedding->root == x0 && reference::naive_valid(inst.graph, shape, *out.embedding))
          ++embedded;
        else
          line.fail(discrepancy_to_json(inst.graph, shape, out));
      }
  }
  line.detail = fmt("1000 graphs, %ld (graph, k, shape) runs, %ld validated at x0", runs, embedded);
  return line;
}

Line biconnected_suite() {
  Line line;
  Rng rng(2002);
  long runs = 0, embedded = 0, discrepancies = 0, exhausted = 0, resolved = 0, case2 = 0, alpha_ok = 0;
  std::map<std::string, long> cases;
  for (int i = 0; i < 300; ++i) {
    const int n = rng.between(8, 12);
    const std::int64_t lo = 3 * n + 1, hi = n * (n - 1) / 2;
    auto g = gen_two_connected(n, lo + static_cast<std::int64_t>(rng.below(hi - lo + 1)), rng.next());
    for (int k = 7; k <= 10; ++k) {
      if (!exceeds_threshold(g, k)) continue;
      for (const auto& shape : enumerate_shapes(k, 4)) {
        if (!shape.is_one_leg_four_spider()) continue;
        ++runs;
        SearchBudget budget;
        auto out = embed_4leg_biconnected(g, shape, budget);
        ++cases[to_string(out.trace.proof_case)];
        if (out.trace.proof_case == ProofCase::Case2Outside || out.trace.proof_case == ProofCase::Case2OnCycle) {
          ++case2;
          for (const auto& f : out.trace.audit_flags)
            if (f.name == "alpha < s - k + l2 + 3" && f.passed) ++alpha_ok;
        }
        if (out.status == EmbedStatus::BudgetExhausted) {
          ++exhausted;
          SearchBudget fallback;
          auto res = oracle_embed(g, shape, std::nullopt, fallback);
          if (res.embedding && validate_embedding(g, shape, *res.embedding)) ++resolved;
          continue;
        }
        if (out.status == EmbedStatus::ProofDiscrepancy) {
          ++discrepancies;
          line.fail(discrepancy_to_json(g, shape, out));
        } else if (out.embedded() && reference::naive_valid(g, shape, *out.embedding)) {
          ++embedded;
        } else {
          line.fail("unvalidated result: " + discrepancy_to_json(g, shape, out));
        }
      }
    }
  }
  if (alpha_ok != case2) line.fail("alpha audit failed in a case 2 run");
  if (exhausted * 100 > runs) line.fail(fmt("budget exhausted on %ld of %ld runs", exhausted, runs));
  if (resolved != exhausted) line.fail("budget-exhausted run not resolved by the oracle");
  std::string mix;
  for (const auto& [c, v] : cases) mix += fmt(" %s=%ld", c.c_str(), v);
  line.detail = fmt("300 graphs, %ld runs, %ld embedded, %ld discrepancies, %ld exhausted (%ld resolved), "
                    "case 2 alpha audits %ld/%ld; cases:%s",
                    runs, embedded, discrepancies, exhausted, resolved, alpha_ok, case2, mix.c_str());
  return line;
}

Line desk_scan_suite() {
  Line line;
  auto exhaustive = run_conjecture_scan(
      parse_scan_config("mode=exhaustive\nn_range=1..6\nk_range=1..5\nroute=oracle\nconnected=true"));
  // k = 10 cannot meet 2m > n(k-1) with n <= 10, so the random draws stop at 9.
  auto random = run_conjecture_scan(
      parse_scan_config("mode=random\nn_range=2..10\nk_range=1..9\nsamples=500\nseed=3003\nroute=both"));
  for (const auto* r : {&exhaustive, &random}) {
    for (const auto& c : r->counterexamples) line.fail(c.graph + " shape " + c.shape.to_string());
    for (const auto& d : r->discrepancies) line.fail(d);
    if (r->totals.embeddings != r->totals.shapes) line.fail("unresolved (graph, shape) pair");
  }
  if (random.totals.graphs != 500) line.fail(fmt("random scan tested %llu graphs", (unsigned long long)random.totals.graphs));
  line.detail = fmt("exhaustive: %llu graphs, %llu shapes, %zu counterexamples; random: %llu graphs, %llu shapes, "
                    "%zu counterexamples, %zu discrepancies, agreement %llu/%llu",
                    (unsigned long long)exhaustive.totals.graphs, (unsigned long long)exhaustive.totals.shapes,
                    exhaustive.counterexamples.size(), (unsigned long long)random.totals.graphs,
                    (unsigned long long)random.totals.shapes, random.counterexamples.size(),
                    random.discrepancies.size(), (unsigned long long)random.totals.agreements,
                    (unsigned long long)random.totals.comparisons);
  return line;
}

Line peeling_suite() {
  Line line;
  Rng rng(4004);
  long good = 0;
  for (int i = 0; i < 10000; ++i) {
    const int n = rng.between(3, 40);
    const int k = rng.between(2, n - 1);
    auto g = gen_random_dense(n, k, rng.next());
    auto r = minimal_dense_subgraph(g, k);
    const Graph& h = r.subgraph;
    bool ok = exceeds_threshold(h, k) && is_connected(h);
    for (Vertex v = 0; v < h.order(); ++v) ok &= h.degree(v) >= (k + 1) / 2;
    if (ok)
      ++good;
    else
      line.fail(fmt("k=%d ", k) + serialize(g));
  }
  line.detail = fmt("%ld/10000 cores connected, dense and of min degree >= ceil(k/2)", good);
  return line;
}

Line oracle_suite() {
  Line line;
  std::vector<SpiderShape> shapes;
  for (int k = 1; k <= 5; ++k)
    for (auto& s : enumerate_shapes(k)) shapes.push_back(s);
  shapes.emplace_back(std::vector<int>{1, 2, 3});
  shapes.emplace_back(std::vector<int>{6});
  long graphs = 0, checks = 0, agree = 0, found = 0;
  for (int n = 1; n <= 7; ++n)
    graphs += enumerate_labeled_graphs(n, nullptr, [&](const Graph& g) {
      for (const auto& shape : shapes) {
        if (shape.size() + 1 > g.order()) continue;
        ++checks;
        SearchBudget budget;
        auto res = oracle_embed(g, shape, std::nullopt, budget);
        const bool expected = reference::naive_contains_spider(g, shape);
        const bool ours = res.status == SearchStatus::Found;
        found += ours;
        if (res.status != SearchStatus::Exhausted && ours == expected &&
            (!ours || reference::naive_valid(g, shape, *res.embedding)))
          ++agree;
        else
          line.fail(shape.to_string() + " on " + serialize(g));
      }
    });
  line.detail = fmt("%ld labeled graphs n <= 7, %zu shapes, %ld/%ld verdicts agree (%ld found)", graphs,
                    shapes.size(), agree, checks, found);
  return line;
}

Line cycle_suite() {
  Line line;
  Rng rng(6006);
  long agree = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = rng.between(3, 9);
    std::vector<Edge> e;
    const int p = rng.between(1, 9);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (static_cast<int>(rng.below(10)) < p) e.emplace_back(u, v);
    Graph g(n, e);
    bool ok = true;
    for (Vertex v = 0; v < n; ++v) {
      SearchBudget budget;
      auto res = max_cycle_through(g, v, budget);
      const int got = res.cycle ? res.cycle->length() : 0;
      ok &= res.status != SearchStatus::Exhausted && got == reference::brute_max_cycle_through(g, v);
      if (res.cycle) ok &= is_valid_cycle(g, *res.cycle) && res.cycle->order[0] == v;
    }
    if (ok)
      ++agree;
    else
      line.fail(serialize(g));
  }
  long instances = 0, lemma_ok = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = rng.between(4, 12);
    const int k = rng.between(2, std::min(8, n - 1));
    Graph g;
    if (i % 2) {
      g = gen_random_dense(n, k, rng.next());
      if (!is_two_connected(g)) continue;
    } else {
      const std::int64_t lo = std::max<std::int64_t>(n, n * (k - 1) / 2 + 1), hi = n * (n - 1) / 2;
      g = gen_two_connected(n, lo + static_cast<std::int64_t>(rng.below(hi - lo + 1)), rng.next());
    }
    for (Vertex v = 0; v < n; ++v) {
      if (g.degree(v) < k) continue;
      ++instances;
      SearchBudget budget;
      auto res = max_cycle_through(g, v, budget);
      if (res.cycle && res.cycle->length() >= k)
        ++lemma_ok;
      else
        line.fail(fmt("s < k=%d at v=%d in ", k, v) + serialize(g));
    }
  }
  line.detail = fmt("%ld/1000 graphs match enumeration at every vertex; s >= k on %ld/%ld 2-connected instances",
                    agree, lemma_ok, instances);
  return line;
}

Line shape_suite() {
  Line line;
  std::string counts;
  for (int k = 1; k <= 12; ++k) {
    const auto got = static_cast<std::int64_t>(enumerate_shapes(k).size());
    const auto want = reference::partition_count(k);
    if (got != want) line.fail(fmt("k=%d: %lld shapes, expected %lld", k, (long long)got, (long long)want));
    counts += fmt("%s%lld", k > 1 ? "," : "", (long long)got);
  }
  line.detail = "k=1..12 -> " + counts;
  return line;
}

}  // namespace

int main() {
  suite("hamiltonian-embed", hamiltonian_suite);
  suite("biconnected-4leg", biconnected_suite);
  suite("desk-scan", desk_scan_suite);
  suite("peeling", peeling_suite);
  suite("oracle-exactness", oracle_suite);
  suite("cycle-exactness", cycle_suite);
  suite("shape-count", shape_suite);
  return failures == 0 ? 0 : 1;
}
