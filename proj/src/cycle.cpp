#include "spider/cycle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>

namespace spider {

std::int64_t budget_from_env(std::int64_t fallback) {
  const char* env = std::getenv("SPIDER_BUDGET");
  if (env == nullptr || *env == '\0') return fallback;
  char* end = nullptr;
  long long v = std::strtoll(env, &end, 10);
  if (end == env || *end != '\0' || v <= 0) return fallback;
  return v;
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::None: return "none";
    case SearchStatus::Exhausted: return "budget_exhausted";
  }
  return "?";
}

bool is_valid_cycle(const Graph& g, const CycleCert& c) {
  const int s = c.length();
  if (s < 3 || c.order.front() != c.through) return false;
  std::vector<char> seen(g.order(), 0);
  for (int i = 0; i < s; ++i) {
    Vertex v = c.order[i];
    if (!g.contains(v) || seen[v]) return false;
    seen[v] = 1;
    if (!g.has_edge(v, c.order[(i + 1) % s])) return false;
  }
  return true;
}

CycleCert reversed(const CycleCert& c) {
  CycleCert out = c;
  std::reverse(out.order.begin() + 1, out.order.end());
  return out;
}

CycleCert rotated_to(const CycleCert& c, Vertex v) {
  auto it = std::find(c.order.begin(), c.order.end(), v);
  if (it == c.order.end()) throw PreconditionError("vertex " + std::to_string(v) + " is not on the cycle");
  CycleCert out = c;
  std::rotate(out.order.begin(), out.order.begin() + (it - c.order.begin()), out.order.end());
  out.through = v;
  return out;
}

namespace {

// Depth-first path extension shared by the three searches. `blocked` marks
// vertices that may not be entered (on the path or forbidden).
class PathExtender {
 public:
  PathExtender(const Graph& g, SearchBudget& budget)
      : g_(g), budget_(budget), blocked_(g.order(), 0), mark_(g.order(), 0) {}

  // Number of unblocked vertices reachable from `from` through unblocked
  // vertices; sets `touches` when some such vertex (or `from`) is adjacent to `target`.
  int reach(Vertex from, Vertex target, bool& touches) {
    ++epoch_;
    touches = false;
    int count = 0;
    stack_.clear();
    for (Vertex w : g_.neighbors(from)) {
      if (w == target) touches = true;
      if (!blocked_[w] && mark_[w] != epoch_) {
        mark_[w] = epoch_;
        stack_.push_back(w);
      }
    }
    while (!stack_.empty()) {
      Vertex u = stack_.back();
      stack_.pop_back();
      ++count;
      for (Vertex w : g_.neighbors(u)) {
        if (w == target) touches = true;
        if (!blocked_[w] && mark_[w] != epoch_) {
          mark_[w] = epoch_;
          stack_.push_back(w);
        }
      }
    }
    return count;
  }

  const Graph& g_;
  SearchBudget& budget_;
  std::vector<char> blocked_;
  std::vector<Vertex> path_;
  bool out_of_budget_ = false;

 private:
  std::vector<unsigned> mark_;
  unsigned epoch_ = 0;
  std::vector<Vertex> stack_;
};

class LongestCycle : PathExtender {
 public:
  LongestCycle(const Graph& g, SearchBudget& budget, Vertex start) : PathExtender(g, budget), start_(start) {}

  CycleSearch run() {
    if (g_.degree(start_) < 2) return {};
    blocked_[start_] = 1;
    path_.push_back(start_);
    bool touches = false;
    ceiling_ = 1 + reach(start_, -1, touches);
    extend();
    if (out_of_budget_) return {SearchStatus::Exhausted, std::nullopt};
    if (best_.empty()) return {};
    return {SearchStatus::Found, CycleCert{best_, start_, true}};
  }

 private:
  bool done() const { return out_of_budget_ || static_cast<int>(best_.size()) == ceiling_; }

  void extend() {
    if (!budget_.tick()) {
      out_of_budget_ = true;
      return;
    }
    const Vertex end = path_.back();
    const int len = static_cast<int>(path_.size());
    if (len >= 3 && len > static_cast<int>(best_.size()) && path_[1] < end && g_.has_edge(end, start_)) {
      best_ = path_;
      if (done()) return;
    }
    bool touches = false;
    int bound = len + reach(end, start_, touches);
    if (!touches || bound <= static_cast<int>(best_.size())) return;
    for (Vertex w : g_.neighbors(end)) {
      if (blocked_[w]) continue;
      blocked_[w] = 1;
      path_.push_back(w);
      extend();
      path_.pop_back();
      blocked_[w] = 0;
      if (done()) return;
    }
  }

  Vertex start_;
  int ceiling_ = 0;
  std::vector<Vertex> best_;
};

class Hamiltonian : PathExtender {
 public:
  Hamiltonian(const Graph& g, SearchBudget& budget) : PathExtender(g, budget) {}

  CycleSearch run() {
    const int n = g_.order();
    for (Vertex v = 0; v < n; ++v)
      if (g_.degree(v) < 2) return {};
    if (!is_connected(g_)) return {};
    blocked_[0] = 1;
    path_.push_back(0);
    extend();
    if (!found_.empty()) return {SearchStatus::Found, CycleCert{found_, 0, true}};
    if (out_of_budget_) return {SearchStatus::Exhausted, std::nullopt};
    return {};
  }

 private:
  // Every unvisited vertex needs two usable neighbors: unvisited ones, the
  // current end, or the start.
  bool degrees_ok(Vertex end) const {
    for (Vertex u = 0; u < g_.order(); ++u) {
      if (blocked_[u]) continue;
      int usable = 0;
      for (Vertex w : g_.neighbors(u))
        if (!blocked_[w] || w == end || w == 0) ++usable;
      if (usable < 2) return false;
    }
    return true;
  }

  void extend() {
    if (!budget_.tick()) {
      out_of_budget_ = true;
      return;
    }
    const int n = g_.order();
    const Vertex end = path_.back();
    const int len = static_cast<int>(path_.size());
    if (len == n) {
      if (g_.has_edge(end, 0) && path_[1] < end) found_ = path_;
      return;
    }
    bool touches = false;
    if (len + reach(end, 0, touches) < n || !touches || !degrees_ok(end)) return;
    for (Vertex w : g_.neighbors(end)) {
      if (blocked_[w]) continue;
      blocked_[w] = 1;
      path_.push_back(w);
      extend();
      path_.pop_back();
      blocked_[w] = 0;
      if (out_of_budget_ || !found_.empty()) return;
    }
  }

  std::vector<Vertex> found_;
};

class LongestPath : PathExtender {
 public:
  LongestPath(const Graph& g, SearchBudget& budget, Vertex start, std::span<const Vertex> forbidden)
      : PathExtender(g, budget), start_(start) {
    for (Vertex f : forbidden)
      if (g.contains(f)) blocked_[f] = 1;
  }

  PathSearch run() {
    blocked_[start_] = 1;
    path_.push_back(start_);
    bool touches = false;
    ceiling_ = 1 + reach(start_, -1, touches);
    extend();
    if (out_of_budget_) return {SearchStatus::Exhausted, std::nullopt};
    return {SearchStatus::Found, PathCert{best_, true}};
  }

 private:
  bool done() const { return out_of_budget_ || static_cast<int>(best_.size()) == ceiling_; }

  void extend() {
    if (!budget_.tick()) {
      out_of_budget_ = true;
      return;
    }
    const int len = static_cast<int>(path_.size());
    if (len > static_cast<int>(best_.size())) {
      best_ = path_;
      if (done()) return;
    }
    const Vertex end = path_.back();
    bool touches = false;
    if (len + reach(end, -1, touches) <= static_cast<int>(best_.size())) return;
    for (Vertex w : g_.neighbors(end)) {
      if (blocked_[w]) continue;
      blocked_[w] = 1;
      path_.push_back(w);
      extend();
      path_.pop_back();
      blocked_[w] = 0;
      if (done()) return;
    }
  }

  Vertex start_;
  int ceiling_ = 0;
  std::vector<Vertex> best_;
};

constexpr std::int64_t kDepthFirstAllowance = 20'000;

enum class SubsetGoal { LongestCycle, Hamiltonian, LongestPath };

struct SubsetResult {
  SearchStatus status = SearchStatus::None;
  std::vector<Vertex> order;
};

// reach[mask] is the set of vertices e such that some path start -> ... -> e
// visits exactly the vertices of mask (start excluded). Masks are processed in
// increasing order, so every subset is complete before its supersets.
SubsetResult subset_search(const Graph& g, Vertex start, const std::vector<char>& eligible, SubsetGoal goal,
                           SearchBudget& budget) {
  std::vector<Vertex> verts;
  std::vector<int> index(g.order(), -1);
  for (Vertex v = 0; v < g.order(); ++v)
    if (eligible[v] && v != start) {
      index[v] = static_cast<int>(verts.size());
      verts.push_back(v);
    }
  const int r = static_cast<int>(verts.size());
  std::vector<std::uint32_t> nbr(r, 0);
  std::uint32_t start_adj = 0;
  for (int i = 0; i < r; ++i)
    for (Vertex w : g.neighbors(verts[i])) {
      if (index[w] >= 0) nbr[i] |= std::uint32_t{1} << index[w];
      else if (w == start) start_adj |= std::uint32_t{1} << i;
    }

  const std::uint32_t full = r == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << r) - 1;
  std::vector<std::uint32_t> reach(static_cast<std::size_t>(full) + 1, 0);
  for (int i = 0; i < r; ++i)
    if (start_adj >> i & 1) reach[std::uint32_t{1} << i] |= std::uint32_t{1} << i;
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    std::uint32_t ends = reach[mask];
    if (!ends) continue;
    if (!budget.charge(std::popcount(ends))) return {SearchStatus::Exhausted, {}};
    for (; ends; ends &= ends - 1) {
      const int e = std::countr_zero(ends);
      for (std::uint32_t ext = nbr[e] & ~mask; ext; ext &= ext - 1) {
        const int w = std::countr_zero(ext);
        reach[mask | (std::uint32_t{1} << w)] |= std::uint32_t{1} << w;
      }
    }
  }

  // Pick the target mask and the admissible final vertices.
  std::uint32_t best = 0, closing = 0;
  int best_size = goal == SubsetGoal::LongestCycle ? 1 : -1;
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    const std::uint32_t ends = goal == SubsetGoal::LongestPath ? reach[mask] : reach[mask] & start_adj;
    if (!ends) continue;
    const int size = std::popcount(mask);
    if (goal == SubsetGoal::Hamiltonian && mask != full) continue;
    if (size > best_size) {
      best_size = size;
      best = mask;
      closing = ends;
    }
  }
  if (best == 0) {
    if (goal == SubsetGoal::LongestPath) return {SearchStatus::Found, {start}};
    return {};
  }

  std::vector<Vertex> tail;
  int e = std::countr_zero(closing);
  std::uint32_t mask = best;
  for (;;) {
    tail.push_back(verts[e]);
    mask ^= std::uint32_t{1} << e;
    if (!mask) break;
    const std::uint32_t prev = reach[mask] & nbr[e];
    e = std::countr_zero(prev);
  }
  std::vector<Vertex> order{start};
  order.insert(order.end(), tail.rbegin(), tail.rend());
  return {SearchStatus::Found, std::move(order)};
}

std::vector<char> reachable_from(const Graph& g, Vertex v, const std::vector<char>& blocked) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{v};
  seen[v] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u))
      if (!seen[w] && !blocked[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
  }
  return seen;
}

int count(const std::vector<char>& flags) { return static_cast<int>(std::count(flags.begin(), flags.end(), 1)); }

// Runs the depth-first search under a small allowance when the subset program
// is available as a fallback; otherwise under the whole budget.
template <class Search, class Fallback>
auto hybrid(SearchBudget& budget, int eligible, Search search, Fallback fallback) {
  if (eligible > kSubsetSearchLimit) return search(budget);
  SearchBudget trial(std::min(kDepthFirstAllowance, budget.remaining()));
  auto res = search(trial);
  budget.charge(trial.consumed());
  if (res.status != SearchStatus::Exhausted || budget.exhausted()) return res;
  return fallback();
}

}  // namespace

CycleSearch hamiltonian_cycle(const Graph& g, SearchBudget& budget) {
  if (g.order() < 3) throw PreconditionError("hamiltonian_cycle needs n >= 3");
  std::vector<char> all(g.order(), 1);
  return hybrid(
      budget, g.order() - 1, [&](SearchBudget& b) { return Hamiltonian(g, b).run(); },
      [&]() -> CycleSearch {
        for (Vertex v = 0; v < g.order(); ++v)
          if (g.degree(v) < 2) return {};
        auto res = subset_search(g, 0, all, SubsetGoal::Hamiltonian, budget);
        if (res.status != SearchStatus::Found) return {res.status, std::nullopt};
        CycleCert c{std::move(res.order), 0, true};
        if (c.order[1] > c.order.back()) c = reversed(c);
        return {SearchStatus::Found, std::move(c)};
      });
}

CycleSearch max_cycle_through(const Graph& g, Vertex v, SearchBudget& budget) {
  if (!g.contains(v)) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  if (g.degree(v) < 2) return {};
  auto component = reachable_from(g, v, std::vector<char>(g.order(), 0));
  return hybrid(
      budget, count(component) - 1, [&](SearchBudget& b) { return LongestCycle(g, b, v).run(); },
      [&]() -> CycleSearch {
        auto res = subset_search(g, v, component, SubsetGoal::LongestCycle, budget);
        if (res.status != SearchStatus::Found) return {res.status, std::nullopt};
        CycleCert c{std::move(res.order), v, true};
        if (c.order[1] > c.order.back()) c = reversed(c);
        return {SearchStatus::Found, std::move(c)};
      });
}

PathSearch max_path_from_avoiding(const Graph& g, Vertex v, std::span<const Vertex> forbidden,
                                  SearchBudget& budget) {
  if (!g.contains(v)) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  std::vector<char> blocked(g.order(), 0);
  for (Vertex f : forbidden)
    if (g.contains(f)) blocked[f] = 1;
  auto region = reachable_from(g, v, blocked);
  return hybrid(
      budget, count(region) - 1, [&](SearchBudget& b) { return LongestPath(g, b, v, forbidden).run(); },
      [&]() -> PathSearch {
        auto res = subset_search(g, v, region, SubsetGoal::LongestPath, budget);
        if (res.status != SearchStatus::Found) return {res.status, std::nullopt};
        return {SearchStatus::Found, PathCert{std::move(res.order), true}};
      });
}

bool is_two_connected(const Graph& g) {
  const int n = g.order();
  if (n < 3 || !is_connected(g)) return false;
  // Iterative low-link DFS from vertex 0.
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next(n, 0);
  int timer = 0, root_children = 0;
  std::vector<Vertex> stack{0};
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    Vertex u = stack.back();
    auto nbrs = g.neighbors(u);
    if (next[u] < nbrs.size()) {
      Vertex w = nbrs[next[u]++];
      if (disc[w] < 0) {
        parent[w] = u;
        disc[w] = low[w] = timer++;
        if (u == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[u]) {
        low[u] = std::min(low[u], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    Vertex p = parent[u];
    if (p >= 0) {
      low[p] = std::min(low[p], low[u]);
      if (p != 0 && low[u] >= disc[p]) return false;
    }
  }
  return root_children < 2;
}

}  // namespace spider
