#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spider/cycle.hpp"
#include "spider/graph.hpp"
#include "spider/spider.hpp"

namespace spider {

/// Which branch of a constructive argument produced the certificate.
enum class ProofCase {
  HamiltonianCycle,      // recursive construction on a hamiltonian graph
  HamiltonianReduction,  // N(x0) inside the longest cycle: recurse on the cycle's vertices
  Case1Outside,          // l >= l2, x0 has a neighbor off the cycle and the path
  Case1a,
  Case1b,
  Case1c,
  Case2Outside,
  Case2OnCycle,
  OracleFallback,
};
const char* to_string(ProofCase c);

struct AuditFlag {
  std::string name;
  bool passed = true;
};

struct EmbedTrace {
  ProofCase proof_case = ProofCase::OracleFallback;
  Vertex root = -1;
  std::optional<int> cycle_length;  // s
  std::optional<int> path_length;   // l
  std::optional<int> alpha;
  std::optional<int> m_index;
  std::optional<int> h_or_q;        // x_h in case 1(c), x_q in case 2 on-cycle
  std::optional<Vertex> outside_neighbor;  // y
  int recursion_depth = 0;
  std::vector<AuditFlag> audit_flags;

  /// Records a checked inequality; returns `passed`.
  bool audit(std::string name, bool passed);
  /// First failed flag, nullptr when every check passed.
  const AuditFlag* first_failure() const;
};

enum class EmbedStatus { Embedded, Absent, BudgetExhausted, ProofDiscrepancy };
const char* to_string(EmbedStatus s);

struct EmbedOutcome {
  EmbedStatus status = EmbedStatus::Absent;
  std::optional<SpiderEmbedding> embedding;
  EmbedTrace trace;
  bool validated = false;
  /// Set for ProofDiscrepancy: the failed inequality, missing witness or validator message.
  std::string failed_check;

  bool embedded() const noexcept { return status == EmbedStatus::Embedded; }
};

/// Builds any k-spider rooted at x0 in a hamiltonian graph h, given a
/// hamiltonian cycle starting at x0 and deg(x0) >= k. The first leg runs along
/// the cycle; the rest come from the graph with the skipped arc removed.
/// Throws PreconditionError when the cycle is not hamiltonian, does not start
/// at x0, or deg(x0) < k.
EmbedOutcome embed_in_hamiltonian(const Graph& h, const CycleCert& cycle, Vertex x0, const SpiderShape& shape);

/// Constructive embedding of S_{1,l2,l3,l4} (l2 >= 2) in a 2-connected graph
/// with 2m > n(k-1), following the longest cycle / longest path case analysis.
/// Throws PreconditionError for the wrong shape, a graph that is not
/// 2-connected, or a graph below the density threshold.
EmbedOutcome embed_4leg_biconnected(const Graph& g, const SpiderShape& shape, SearchBudget& budget);

struct OracleResult {
  SearchStatus status = SearchStatus::None;
  std::optional<SpiderEmbedding> embedding;
};

/// Exhaustive backtracking over roots and vertex-disjoint legs, longest leg
/// first. None is exact: no embedding exists (rooted at `root` when given).
OracleResult oracle_embed(const Graph& g, const SpiderShape& shape, std::optional<Vertex> root,
                          SearchBudget& budget);

struct DispatchOptions {
  std::int64_t budget = kDefaultBudget;  // per route
  bool oracle_only = false;
};

/// Peels g to its dense core H, then tries the hamiltonian construction, the
/// 2-connected case machine, and finally the oracle on g. The certificate is
/// reported in g's labels. Throws PreconditionError when shape.size() != k or
/// g is below the threshold.
EmbedOutcome embed_any(const Graph& g, int k, const SpiderShape& shape, const DispatchOptions& opts = {});

/// JSON object for a trace (case, witnesses, audit flags).
std::string trace_to_json(const EmbedTrace& trace);

/// Structured record of a failed proof step: graph, shape, trace and failed check.
std::string discrepancy_to_json(const Graph& g, const SpiderShape& shape, const EmbedOutcome& outcome);

}  // namespace spider
