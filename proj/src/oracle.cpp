#include <algorithm>
#include <numeric>

#include "spider/embed.hpp"

namespace spider {

namespace {

class SpiderSearch {
 public:
  SpiderSearch(const Graph& g, const SpiderShape& shape, SearchBudget& budget)
      : g_(g), budget_(budget), lengths_(shape.legs().rbegin(), shape.legs().rend()), used_(g.order(), 0) {}

  OracleResult run(std::optional<Vertex> root) {
    const int f = static_cast<int>(lengths_.size());
    const int vertices_needed = 1 + std::accumulate(lengths_.begin(), lengths_.end(), 0);
    if (vertices_needed > g_.order()) return {};
    emb_.legs.reserve(f);  // grow() holds references into legs across start_leg()
    for (Vertex r = 0; r < g_.order(); ++r) {
      if (root && r != *root) continue;
      if (g_.degree(r) < f) continue;
      root_ = r;
      used_[r] = 1;
      emb_.root = r;
      free_ = g_.order() - 1;
      bool found = start_leg(0);
      used_[r] = 0;
      if (found) return {SearchStatus::Found, emb_};
      if (exhausted_) return {SearchStatus::Exhausted, std::nullopt};
    }
    return {};
  }

 private:
  bool start_leg(int i) {
    const int f = static_cast<int>(lengths_.size());
    int spare_roots = 0, need = 0;
    for (Vertex w : g_.neighbors(root_)) spare_roots += !used_[w];
    for (int j = i; j < f; ++j) need += lengths_[j];
    if (spare_roots < f - i || free_ < need) return false;
    emb_.legs.resize(i + 1);
    emb_.legs[i].assign(1, root_);
    return grow(i);
  }

  bool grow(int i) {
    if (!budget_.tick()) {
      exhausted_ = true;
      return false;
    }
    auto& leg = emb_.legs[i];
    if (static_cast<int>(leg.size()) - 1 == lengths_[i]) {
      if (i + 1 == static_cast<int>(lengths_.size())) return true;
      return start_leg(i + 1);
    }
    const Vertex end = leg.back();
    // Consecutive legs of equal length are interchangeable: force their first
    // vertices to increase.
    const Vertex floor =
        (leg.size() == 1 && i > 0 && lengths_[i] == lengths_[i - 1]) ? emb_.legs[i - 1][1] : Vertex{-1};
    for (Vertex w : g_.neighbors(end)) {
      if (used_[w] || w < floor) continue;
      used_[w] = 1;
      --free_;
      leg.push_back(w);
      if (grow(i)) return true;
      leg.pop_back();
      ++free_;
      used_[w] = 0;
      if (exhausted_) return false;
    }
    return false;
  }

  const Graph& g_;
  SearchBudget& budget_;
  std::vector<int> lengths_;  // descending
  std::vector<char> used_;
  SpiderEmbedding emb_;
  Vertex root_ = -1;
  int free_ = 0;
  bool exhausted_ = false;
};

}  // namespace

OracleResult oracle_embed(const Graph& g, const SpiderShape& shape, std::optional<Vertex> root,
                          SearchBudget& budget) {
  if (root && !g.contains(*root)) throw PreconditionError("root out of range");
  return SpiderSearch(g, shape, budget).run(root);
}

}  // namespace spider
