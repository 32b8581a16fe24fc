#include <string>

#include "json.hpp"
#include "spider/dense.hpp"
#include "spider/embed.hpp"

namespace spider {

namespace {

void relabel(SpiderEmbedding& emb, const std::vector<Vertex>& to_old) {
  emb.root = to_old[emb.root];
  for (auto& leg : emb.legs)
    for (auto& v : leg) v = to_old[v];
}

EmbedOutcome run_oracle(const Graph& g, const SpiderShape& shape, std::int64_t max_nodes) {
  EmbedOutcome out;
  out.trace.proof_case = ProofCase::OracleFallback;
  SearchBudget budget(max_nodes);
  auto res = oracle_embed(g, shape, std::nullopt, budget);
  switch (res.status) {
    case SearchStatus::Found: {
      auto v = validate_embedding(g, shape, *res.embedding);
      out.validated = v.ok;
      if (!v.ok) {
        out.status = EmbedStatus::ProofDiscrepancy;
        out.failed_check = "validate: " + v.diagnostic;
        return out;
      }
      out.trace.root = res.embedding->root;
      out.embedding = std::move(res.embedding);
      out.status = EmbedStatus::Embedded;
      break;
    }
    case SearchStatus::None: out.status = EmbedStatus::Absent; break;
    case SearchStatus::Exhausted: out.status = EmbedStatus::BudgetExhausted; break;
  }
  return out;
}

}  // namespace

EmbedOutcome embed_any(const Graph& g, int k, const SpiderShape& shape, const DispatchOptions& opts) {
  if (shape.size() != k)
    throw PreconditionError("shape " + shape.to_string() + " has size " + std::to_string(shape.size()) +
                            ", expected k = " + std::to_string(k));
  if (!exceeds_threshold(g, k)) throw PreconditionError("graph does not satisfy 2m > n(k-1)");
  if (opts.oracle_only || k < 2) return run_oracle(g, shape, opts.budget);

  const PeelResult peel = minimal_dense_subgraph(g, k);
  const Graph& h = peel.subgraph;

  auto lift = [&](EmbedOutcome out) {
    if (out.embedding) {
      relabel(*out.embedding, peel.to_old);
      out.trace.root = out.embedding->root;
      auto v = validate_embedding(g, shape, *out.embedding);
      out.validated = v.ok;
      if (!v.ok) {
        out.status = EmbedStatus::ProofDiscrepancy;
        out.failed_check = "validate after relabel: " + v.diagnostic;
        out.embedding.reset();
      }
    } else if (out.trace.root >= 0) {
      out.trace.root = peel.to_old[out.trace.root];
    }
    return out;
  };

  if (h.order() >= 3) {
    SearchBudget budget(opts.budget);
    auto ham = hamiltonian_cycle(h, budget);
    if (ham.status == SearchStatus::Found) {
      Vertex x0 = 0;
      for (Vertex v = 1; v < h.order(); ++v)
        if (h.degree(v) > h.degree(x0)) x0 = v;
      return lift(embed_in_hamiltonian(h, rotated_to(*ham.cycle, x0), x0, shape));
    }
  }

  if (shape.is_one_leg_four_spider() && is_two_connected(h)) {
    SearchBudget budget(opts.budget);
    auto out = embed_4leg_biconnected(h, shape, budget);
    if (out.status != EmbedStatus::BudgetExhausted) return lift(std::move(out));
  }

  return run_oracle(g, shape, opts.budget);
}

std::string trace_to_json(const EmbedTrace& trace) {
  nlohmann::json j;
  j["case"] = to_string(trace.proof_case);
  j["root"] = trace.root;
  auto opt = [&](const char* key, const auto& value) {
    if (value) j[key] = *value;
  };
  opt("s", trace.cycle_length);
  opt("l", trace.path_length);
  opt("alpha", trace.alpha);
  opt("m", trace.m_index);
  opt("h_or_q", trace.h_or_q);
  opt("y", trace.outside_neighbor);
  j["recursion_depth"] = trace.recursion_depth;
  j["audit"] = nlohmann::json::array();
  for (const auto& f : trace.audit_flags) j["audit"].push_back({{"check", f.name}, {"passed", f.passed}});
  return j.dump();
}

std::string discrepancy_to_json(const Graph& g, const SpiderShape& shape, const EmbedOutcome& outcome) {
  nlohmann::json j;
  j["graph"] = serialize(g);
  j["shape"] = shape.legs();
  j["trace"] = nlohmann::json::parse(trace_to_json(outcome.trace));
  j["failed_check"] = outcome.failed_check;
  return j.dump();
}

}  // namespace spider
