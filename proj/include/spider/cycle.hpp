#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "spider/graph.hpp"

namespace spider {

inline constexpr std::int64_t kDefaultBudget = 10'000'000;

/// Node budget shared by the exact searches. Exhaustion is reported as its own
/// outcome and never conflated with "no solution".
class SearchBudget {
 public:
  explicit SearchBudget(std::int64_t max_nodes = kDefaultBudget) : max_nodes_(max_nodes) {}

  /// Charges one search node; false once the budget is spent.
  bool tick() noexcept {
    if (consumed_ >= max_nodes_) return false;
    ++consumed_;
    return true;
  }
  /// Charges `nodes` at once, saturating at the maximum; false if that spends the budget.
  bool charge(std::int64_t nodes) noexcept {
    consumed_ = std::min(max_nodes_, consumed_ + nodes);
    return consumed_ < max_nodes_;
  }
  std::int64_t remaining() const noexcept { return max_nodes_ - consumed_; }
  std::int64_t max_nodes() const noexcept { return max_nodes_; }
  std::int64_t consumed() const noexcept { return consumed_; }
  bool exhausted() const noexcept { return consumed_ >= max_nodes_; }

 private:
  std::int64_t max_nodes_;
  std::int64_t consumed_ = 0;
};

/// Budget from the SPIDER_BUDGET environment variable when set, else `fallback`.
std::int64_t budget_from_env(std::int64_t fallback = kDefaultBudget);

enum class SearchStatus { Found, None, Exhausted };
const char* to_string(SearchStatus s);

/// Cycle x0 x1 ... x_{s-1} (closing edge implied) with order[0] == through.
struct CycleCert {
  std::vector<Vertex> order;
  Vertex through = -1;
  bool maximal = false;

  int length() const noexcept { return static_cast<int>(order.size()); }
  /// Vertex at cycle position i, taken modulo the length.
  Vertex at(int i) const { return order[((i % length()) + length()) % length()]; }
};

/// Path order[0] = start, then u1 ... u_l.
struct PathCert {
  std::vector<Vertex> order;
  bool maximal = false;

  int length() const noexcept { return static_cast<int>(order.size()) - 1; }
  Vertex end() const { return order.back(); }
};

struct CycleSearch {
  SearchStatus status = SearchStatus::None;
  std::optional<CycleCert> cycle;
};

struct PathSearch {
  SearchStatus status = SearchStatus::None;
  std::optional<PathCert> path;
};

bool is_valid_cycle(const Graph& g, const CycleCert& c);

/// Same cycle traversed in the opposite direction, still starting at `through`.
CycleCert reversed(const CycleCert& c);
/// Same cycle rotated so that v is at position 0. v must lie on the cycle.
CycleCert rotated_to(const CycleCert& c, Vertex v);

// The three searches below run a pruned depth-first search first. When that
// does not settle the question within a small node allowance and at most
// kSubsetSearchLimit vertices are eligible, they switch to an exact dynamic
// program over vertex subsets; both charge the same budget.
inline constexpr int kSubsetSearchLimit = 20;

/// Exact search for a hamiltonian cycle. Needs n >= 3.
CycleSearch hamiltonian_cycle(const Graph& g, SearchBudget& budget);

/// Longest cycle through v; Found results carry maximal = true and are
/// oriented so that order[1] < order[s-1]. Status None means no cycle passes
/// through v (in particular when deg(v) < 2).
CycleSearch max_cycle_through(const Graph& g, Vertex v, SearchBudget& budget);

/// Longest path from v whose other vertices avoid `forbidden`. Always Found
/// unless the budget runs out; the path has length 0 when v has no usable neighbor.
PathSearch max_path_from_avoiding(const Graph& g, Vertex v, std::span<const Vertex> forbidden,
                                  SearchBudget& budget);

/// n >= 3, connected and free of articulation vertices.
bool is_two_connected(const Graph& g);

}  // namespace spider
