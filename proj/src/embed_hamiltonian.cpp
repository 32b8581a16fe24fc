#include <algorithm>
#include <string>

#include "spider/embed.hpp"

namespace spider {

const char* to_string(ProofCase c) {
  switch (c) {
    case ProofCase::HamiltonianCycle: return "hamiltonian_cycle";
    case ProofCase::HamiltonianReduction: return "hamiltonian_reduction";
    case ProofCase::Case1Outside: return "case1_outside";
    case ProofCase::Case1a: return "case1a";
    case ProofCase::Case1b: return "case1b";
    case ProofCase::Case1c: return "case1c";
    case ProofCase::Case2Outside: return "case2_outside";
    case ProofCase::Case2OnCycle: return "case2_on_cycle";
    case ProofCase::OracleFallback: return "oracle_fallback";
  }
  return "?";
}

const char* to_string(EmbedStatus s) {
  switch (s) {
    case EmbedStatus::Embedded: return "embedded";
    case EmbedStatus::Absent: return "absent";
    case EmbedStatus::BudgetExhausted: return "budget_exhausted";
    case EmbedStatus::ProofDiscrepancy: return "proof_discrepancy";
  }
  return "?";
}

bool EmbedTrace::audit(std::string name, bool passed) {
  audit_flags.push_back({std::move(name), passed});
  return passed;
}

const AuditFlag* EmbedTrace::first_failure() const {
  for (const auto& f : audit_flags)
    if (!f.passed) return &f;
  return nullptr;
}

EmbedOutcome embed_in_hamiltonian(const Graph& h, const CycleCert& cycle, Vertex x0, const SpiderShape& shape) {
  const int k = shape.size();
  if (!h.contains(x0)) throw PreconditionError("root out of range");
  if (cycle.length() != h.order() || !is_valid_cycle(h, cycle))
    throw PreconditionError("certificate is not a hamiltonian cycle of the graph");
  if (cycle.order.front() != x0) throw PreconditionError("cycle must start at the root");
  if (h.degree(x0) < k)
    throw PreconditionError("deg(x0) = " + std::to_string(h.degree(x0)) + " < k = " + std::to_string(k));

  EmbedOutcome out;
  EmbedTrace& tr = out.trace;
  tr.proof_case = ProofCase::HamiltonianCycle;
  tr.root = x0;
  tr.cycle_length = cycle.length();

  auto fail = [&](std::string what) {
    out.status = EmbedStatus::ProofDiscrepancy;
    out.failed_check = std::move(what);
    return out;
  };

  std::vector<char> alive(h.order(), 1);
  std::vector<Vertex> cyc = cycle.order;  // current reduced cycle, cyc[0] == x0
  const auto& legs = shape.legs();
  SpiderEmbedding emb{x0, {}};
  auto arc = [&](int from, int len, int dir) {
    std::vector<Vertex> leg{x0};
    const int size = static_cast<int>(cyc.size());
    for (int j = 0; j < len; ++j) leg.push_back(cyc[((from + dir * j) % size + size) % size]);
    return leg;
  };

  std::size_t next = 0;
  int remaining = k;
  for (;;) {
    int live_degree = 0;
    for (Vertex w : h.neighbors(x0)) live_degree += alive[w];
    if (!tr.audit("deg_H'(x0) >= k - l1", live_degree >= remaining))
      return fail("deg_H'(x0) >= k - l1");

    const int legs_left = static_cast<int>(legs.size() - next);
    if (remaining <= 3 || legs_left == 1) break;

    const int l1 = legs[next];
    emb.legs.push_back(arc(1, l1, +1));
    int alpha = -1;
    for (int a = l1 + 1; a < static_cast<int>(cyc.size()); ++a)
      if (h.has_edge(x0, cyc[a])) {
        alpha = a;
        break;
      }
    if (alpha < 0) return fail("x_alpha in N(x0) with alpha >= l1 + 1");
    if (tr.recursion_depth == 0) tr.alpha = alpha;
    for (int j = 1; j < alpha; ++j) alive[cyc[j]] = 0;
    cyc.erase(cyc.begin() + 1, cyc.begin() + alpha);
    remaining -= l1;
    ++next;
    ++tr.recursion_depth;
  }

  // Base cases: a single leg, or k' <= 3 (S_{1,1}, S_{1,2}, S_{1,1,1}).
  const int size = static_cast<int>(cyc.size());
  const std::vector<int> rest(legs.begin() + static_cast<std::ptrdiff_t>(next), legs.end());
  if (!tr.audit("cycle length >= k' + 1", size >= remaining + 1)) return fail("cycle length >= k' + 1");
  if (rest.size() == 1) {
    emb.legs.push_back(arc(1, rest[0], +1));
  } else if (rest.size() == 2) {
    emb.legs.push_back(arc(1, rest[0], +1));
    emb.legs.push_back(arc(size - 1, rest[1], -1));
  } else {
    // S_{1,1,1}: the first three neighbors of x0 along the cycle.
    for (int j = 1; j < size && emb.legs.size() < legs.size(); ++j)
      if (h.has_edge(x0, cyc[j])) emb.legs.push_back({x0, cyc[j]});
    if (emb.legs.size() != legs.size()) return fail("three neighbors of x0 for S_{1,1,1}");
  }

  auto v = validate_embedding(h, shape, emb);
  out.validated = v.ok;
  if (!v.ok) return fail("validate: " + v.diagnostic);
  out.embedding = std::move(emb);
  out.status = EmbedStatus::Embedded;
  return out;
}

}  // namespace spider
