#pragma once

#include <string>
#include <vector>

#include "spider/graph.hpp"

namespace spider {

/// Leg lengths l1 <= l2 <= ... <= lf of a spider with k = sum of legs edges.
class SpiderShape {
 public:
  /// Sorts the legs; throws PreconditionError if empty or any leg < 1.
  explicit SpiderShape(std::vector<int> legs);

  const std::vector<int>& legs() const noexcept { return legs_; }
  int size() const noexcept { return k_; }
  int leg_count() const noexcept { return static_cast<int>(legs_.size()); }
  int leg(int i) const { return legs_[i]; }

  /// S_{1,l2,l3,l4} with l2 >= 2, the family handled by the 2-connected case machine.
  bool is_one_leg_four_spider() const;

  std::string to_string() const;  // "1,2,2,3"
  static SpiderShape parse(const std::string& text);

  friend bool operator==(const SpiderShape&, const SpiderShape&) = default;
  friend auto operator<=>(const SpiderShape& a, const SpiderShape& b) { return a.legs_ <=> b.legs_; }

 private:
  std::vector<int> legs_;
  int k_ = 0;
};

/// Root plus one vertex sequence per leg, each sequence starting at the root.
struct SpiderEmbedding {
  Vertex root = -1;
  std::vector<std::vector<Vertex>> legs;

  friend bool operator==(const SpiderEmbedding&, const SpiderEmbedding&) = default;
};

struct Validation {
  bool ok = true;
  std::string diagnostic;  // first failure, empty when ok
  explicit operator bool() const noexcept { return ok; }
};

/// Checks an embedding certificate against g and shape. Leg lengths are matched
/// to the shape as a multiset.
Validation validate_embedding(const Graph& g, const SpiderShape& shape, const SpiderEmbedding& emb);

/// {"root": int, "legs": [[int,...],...]}
std::string embedding_to_json(const SpiderEmbedding& emb);
SpiderEmbedding embedding_from_json(const std::string& text);

/// All partitions of k (into exactly `legs` parts if legs > 0), each sorted
/// ascending, in lexicographic order.
std::vector<SpiderShape> enumerate_shapes(int k, int legs = 0);

}  // namespace spider
