#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spider/cycle.hpp"
#include "spider/embed.hpp"
#include "spider/graph.hpp"
#include "spider/spider.hpp"

namespace spider {

/// Seeded stream used by every generator. Bounded draws use rejection on the
/// raw 64-bit output so results do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  static constexpr const char* kName = "mt19937_64/rejection-bounded v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// 64-bit FNV-1a of the canonical serialization, as 16 hex digits.
std::string graph_id(const Graph& g);

/// floor(n(k-1)/2) + 1 uniformly chosen edges, the fewest that satisfy
/// 2m > n(k-1). Throws PreconditionError when n <= k.
Graph gen_random_dense(int n, int k, std::uint64_t seed);

struct HamiltonianInstance {
  Graph graph;
  CycleCert cycle;  // the planted cycle
};

/// Random permutation cycle plus `extra_edges` distinct chords.
HamiltonianInstance gen_hamiltonian(int n, int extra_edges, std::uint64_t seed);

/// Planted hamiltonian cycle plus m - n chords; 2-connected by construction.
Graph gen_two_connected(int n, std::int64_t m, std::uint64_t seed);

/// Streams every labeled graph on n <= 8 vertices in edge-mask order (bit i is
/// the i-th pair (0,1),(0,2),...,(n-2,n-1)) through `keep`, calling `visit`
/// for the accepted ones. Returns the number visited.
std::uint64_t enumerate_labeled_graphs(int n, const std::function<bool(const Graph&)>& keep,
                                       const std::function<void(const Graph&)>& visit);

enum class ScanMode { Exhaustive, Random };
enum class ScanFamily { Dense, Hamiltonian, TwoConnected };
enum class ScanRoute { Constructive, Oracle, Both };
enum class ShapeFilter { All, FourLeg };

struct ScanConfig {
  int n_min = 3, n_max = 6;
  int k_min = 2, k_max = 4;
  ScanMode mode = ScanMode::Random;
  int samples = 100;
  std::uint64_t seed = 1;
  ScanFamily family = ScanFamily::Dense;
  std::int64_t budget = kDefaultBudget;
  ScanRoute route = ScanRoute::Both;
  ShapeFilter shapes = ShapeFilter::All;
  bool require_connected = false;
};

/// Flat key=value text ('#' comments). Keys: n_range, k_range (as "lo..hi"),
/// mode, samples, seed, family, budget, route, shapes, connected.
ScanConfig parse_scan_config(const std::string& text);
std::string config_to_json(const ScanConfig& cfg);

struct ScanRow {
  std::string graph_id;
  int n = 0;
  std::int64_t m = 0;
  int k = 0;
  SpiderShape shape{{1}};
  std::optional<EmbedStatus> constructive;
  std::optional<ProofCase> proof_case;
  std::optional<SearchStatus> oracle;
};

struct Counterexample {
  std::string graph;  // canonical serialization
  SpiderShape shape;
};

struct ScanTotals {
  std::uint64_t graphs = 0;
  std::uint64_t shapes = 0;
  std::uint64_t embeddings = 0;
  std::uint64_t budget_exhausted = 0;
  std::uint64_t agreements = 0;
  std::uint64_t comparisons = 0;
};

struct ScanReport {
  ScanConfig config;
  ScanTotals totals;
  std::vector<ScanRow> rows;  // sorted by graph id, then k, then shape
  std::vector<std::string> discrepancies;  // discrepancy_to_json records
  std::vector<Counterexample> counterexamples;
  double wall_time = 0.0;
};

/// Throws PreconditionError for an invalid configuration.
ScanReport run_conjecture_scan(const ScanConfig& cfg);

/// Header line, one line per row, discrepancy and counterexample lines, then a
/// summary trailer. Everything except the trailer's wall time is deterministic.
std::string report_to_jsonl(const ScanReport& report);

}  // namespace spider
