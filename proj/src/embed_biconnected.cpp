#include <string>

#include "spider/embed.hpp"

namespace spider {

namespace {

// Positions along the longest cycle C_s = x0 x1 ... x_{s-1} and the longest
// path P = x0 u1 ... u_l leaving it.
struct Frame {
  const Graph& g;
  const CycleCert& cycle;
  const PathCert& path;
  Vertex x0;

  int s() const { return cycle.length(); }
  Vertex x(int i) const { return cycle.at(i); }
  Vertex u(int j) const { return path.order[j]; }

  // x0 x1 ... x_len
  std::vector<Vertex> forward(int len) const {
    std::vector<Vertex> leg{x0};
    for (int i = 1; i <= len; ++i) leg.push_back(x(i));
    return leg;
  }
  // x0 x_{s-1} ... x_{s-len}
  std::vector<Vertex> backward(int len) const {
    std::vector<Vertex> leg{x0};
    for (int i = 1; i <= len; ++i) leg.push_back(x(s() - i));
    return leg;
  }
  // x0 u1 ... u_len
  std::vector<Vertex> along_path(int len) const {
    return {path.order.begin(), path.order.begin() + len + 1};
  }
};

}  // namespace

EmbedOutcome embed_4leg_biconnected(const Graph& g, const SpiderShape& shape, SearchBudget& budget) {
  if (!shape.is_one_leg_four_spider())
    throw PreconditionError("shape must be S_{1,l2,l3,l4} with l2 >= 2, got " + shape.to_string());
  const int k = shape.size();
  const int l2 = shape.leg(1), l3 = shape.leg(2), l4 = shape.leg(3);
  if (!is_two_connected(g)) throw PreconditionError("graph is not 2-connected");
  if (!exceeds_threshold(g, k)) throw PreconditionError("graph does not satisfy 2m > n(k-1)");

  EmbedOutcome out;
  EmbedTrace& tr = out.trace;
  auto fail = [&](std::string what) {
    out.status = EmbedStatus::ProofDiscrepancy;
    out.failed_check = std::move(what);
    return out;
  };

  Vertex x0 = 0;
  for (Vertex v = 1; v < g.order(); ++v)
    if (g.degree(v) > g.degree(x0)) x0 = v;
  tr.root = x0;
  tr.audit("deg(x0) >= k", g.degree(x0) >= k);

  auto cycle_search = max_cycle_through(g, x0, budget);
  if (cycle_search.status == SearchStatus::Exhausted) {
    out.status = EmbedStatus::BudgetExhausted;
    return out;
  }
  if (!cycle_search.cycle) return fail("cycle through x0");
  const CycleCert& cycle = *cycle_search.cycle;
  const int s = cycle.length();
  tr.cycle_length = s;
  if (!tr.audit("s >= k", s >= k)) return fail("s >= k");

  std::vector<char> on_cycle(g.order(), 0);
  for (Vertex v : cycle.order) on_cycle[v] = 1;
  bool neighborhood_on_cycle = true;
  for (Vertex w : g.neighbors(x0)) neighborhood_on_cycle &= on_cycle[w] != 0;

  SpiderEmbedding emb{x0, {}};

  if (neighborhood_on_cycle) {
    tr.proof_case = ProofCase::HamiltonianReduction;
    auto sub = induced_subgraph(g, cycle.order);
    CycleCert local{{}, sub.to_new[x0], true};
    for (Vertex v : cycle.order) local.order.push_back(sub.to_new[v]);
    auto inner = embed_in_hamiltonian(sub.graph, local, local.through, shape);
    tr.recursion_depth = inner.trace.recursion_depth;
    tr.alpha = inner.trace.alpha;
    for (auto& f : inner.trace.audit_flags) tr.audit_flags.push_back(f);
    if (!inner.embedded()) return fail(inner.failed_check);
    for (auto& leg : inner.embedding->legs) {
      for (auto& v : leg) v = sub.to_old[v];
      emb.legs.push_back(std::move(leg));
    }
  } else {
    auto path_search = max_path_from_avoiding(g, x0, cycle.order, budget);
    if (path_search.status == SearchStatus::Exhausted) {
      out.status = EmbedStatus::BudgetExhausted;
      return out;
    }
    const PathCert& path = *path_search.path;
    const int l = path.length();
    tr.path_length = l;
    std::vector<char> on_path(g.order(), 0);
    for (Vertex v : path.order) on_path[v] = 1;

    const Frame fr{g, cycle, path, x0};
    std::optional<Vertex> y;
    for (Vertex w : g.neighbors(x0))
      if (!on_cycle[w] && !on_path[w]) {
        y = w;
        break;
      }
    tr.outside_neighbor = y;
    int x0_on_cycle = 0;
    for (Vertex w : g.neighbors(x0)) x0_on_cycle += on_cycle[w];

    if (l >= l2) {
      auto p3 = fr.forward(l3);
      auto p4 = fr.backward(l4);
      if (y) {
        tr.proof_case = ProofCase::Case1Outside;
        emb.legs = {{x0, *y}, fr.along_path(l2), p3, p4};
      } else {
        std::optional<int> m;
        for (int j = 2; j <= l - l2 + 1 && !m; ++j)
          if (g.has_edge(x0, fr.u(j))) m = j;
        if (m) {
          tr.proof_case = ProofCase::Case1a;
          tr.m_index = m;
          std::vector<Vertex> p2{x0};
          for (int j = *m; j <= *m + l2 - 1; ++j) p2.push_back(fr.u(j));
          emb.legs = {{x0, fr.u(1)}, p2, p3, p4};
        } else {
          for (int j = l2 + 1; j <= l && !m; ++j)
            if (g.has_edge(x0, fr.u(j))) m = j;
          if (m) {
            tr.proof_case = ProofCase::Case1b;
            tr.m_index = m;
            std::vector<Vertex> p2{x0};
            for (int j = *m; j >= *m - l2 + 1; --j) p2.push_back(fr.u(j));
            emb.legs = {{x0, fr.u(1)}, p2, p3, p4};
          } else {
            tr.proof_case = ProofCase::Case1c;
            tr.audit("|N(x0) & V(C_s)| >= 1 + l3 + l4", x0_on_cycle >= 1 + l3 + l4);
            std::optional<int> h;
            for (int i = l3 + 1; i < s - l4 && !h; ++i)
              if (g.has_edge(x0, fr.x(i))) h = i;
            if (!h) return fail("edge x0x_h with l3 < h < s - l4");
            tr.h_or_q = h;
            emb.legs = {{x0, fr.x(*h)}, fr.along_path(l2), p3, p4};
          }
        }
      }
    } else {
      const Vertex ul = path.end();
      tr.proof_case = y ? ProofCase::Case2Outside : ProofCase::Case2OnCycle;
      tr.audit("l <= l2 - 1", l <= l2 - 1);
      tr.audit("deg(u_l) >= k/2", 2 * g.degree(ul) >= k);
      bool closed = true;
      for (Vertex w : g.neighbors(ul)) closed &= on_cycle[w] || on_path[w];
      tr.audit("N(u_l) in V(C_s) u V(P)", closed);
      bool head = true, tail = true, consecutive = true;
      for (int i = 1; i <= l; ++i) {
        head &= !g.has_edge(ul, fr.x(i));
        tail &= !g.has_edge(ul, fr.x(s - i));
      }
      for (int j = 0; j < s; ++j) consecutive &= !(g.has_edge(ul, fr.x(j)) && g.has_edge(ul, fr.x(j + 1)));
      tr.audit("N(u_l) & {x_1..x_l} empty", head);
      tr.audit("N(u_l) & {x_{s-l}..x_{s-1}} empty", tail);
      tr.audit("no consecutive x_j, x_{j+1} in N(u_l)", consecutive);

      int window = 0;
      std::optional<int> alpha;
      for (int i = l2 + 1; i <= s - l2 - 1; ++i)
        if (g.has_edge(ul, fr.x(i))) {
          ++window;
          if (!alpha) alpha = i;
        }
      tr.audit("|N(u_l) & {x_{l2+1}..x_{s-l2-1}}| >= k/2 - l2 - 1", 2 * window >= k - 2 * l2 - 2);
      tr.audit("|N(u_l) & {x_{l2+1}..x_{s-l2-1}}| > 0", window > 0);
      if (!alpha) return fail("x_alpha in N(u_l) with l2 + 1 <= alpha <= s - l2 - 1");
      tr.alpha = alpha;
      tr.audit("alpha < s - k + l2 + 3", *alpha < s - k + l2 + 3);
      const int p3_end = *alpha + l3 - l - 1;
      if (!tr.audit("alpha + l3 - l - 1 < s - l4", p3_end < s - l4)) return fail("alpha + l3 - l - 1 < s - l4");

      auto p2 = fr.forward(l2);
      auto p3 = fr.along_path(l);
      for (int i = *alpha; i <= p3_end; ++i) p3.push_back(fr.x(i));
      auto p4 = fr.backward(l4);
      if (y) {
        emb.legs = {{x0, *y}, p2, p3, p4};
      } else {
        tr.audit("|N(x0) & V(C_s)| >= k - l", x0_on_cycle >= k - l);
        std::vector<char> in_index_set(s, 0);
        for (int i = 1; i <= l2; ++i) in_index_set[i] = 1;
        for (int i = *alpha; i <= p3_end; ++i) in_index_set[i] = 1;
        for (int i = s - l4; i <= s - 1; ++i) in_index_set[i] = 1;
        std::optional<int> q;
        for (int i = 1; i < s && !q; ++i)
          if (!in_index_set[i] && g.has_edge(x0, fr.x(i))) q = i;
        if (!q) return fail("x_q in N(x0) with q outside I");
        tr.h_or_q = q;
        emb.legs = {{x0, fr.x(*q)}, p2, p3, p4};
      }
    }
  }

  auto v = validate_embedding(g, shape, emb);
  out.validated = v.ok;
  if (v.ok) out.embedding = std::move(emb);
  if (const AuditFlag* bad = tr.first_failure()) return fail(bad->name);
  if (!v.ok) return fail("validate: " + v.diagnostic);
  out.status = EmbedStatus::Embedded;
  return out;
}

}  // namespace spider
