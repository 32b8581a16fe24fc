#include "spider/spider.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "json.hpp"

namespace spider {

SpiderShape::SpiderShape(std::vector<int> legs) : legs_(std::move(legs)) {
  if (legs_.empty()) throw PreconditionError("spider needs at least one leg");
  std::sort(legs_.begin(), legs_.end());
  if (legs_.front() < 1) throw PreconditionError("spider legs must have length >= 1");
  for (int l : legs_) k_ += l;
}

bool SpiderShape::is_one_leg_four_spider() const {
  return leg_count() == 4 && legs_[0] == 1 && legs_[1] >= 2;
}

std::string SpiderShape::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < legs_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(legs_[i]);
  }
  return out;
}

SpiderShape SpiderShape::parse(const std::string& text) {
  std::vector<int> legs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw PreconditionError("bad leg length '" + item + "'");
    }
    if (used != item.size()) throw PreconditionError("bad leg length '" + item + "'");
    legs.push_back(v);
  }
  return SpiderShape(std::move(legs));
}

Validation validate_embedding(const Graph& g, const SpiderShape& shape, const SpiderEmbedding& emb) {
  auto fail = [](std::string msg) { return Validation{false, std::move(msg)}; };
  if (!g.contains(emb.root)) return fail("root " + std::to_string(emb.root) + " not a vertex");
  if (static_cast<int>(emb.legs.size()) != shape.leg_count())
    return fail("expected " + std::to_string(shape.leg_count()) + " legs, got " + std::to_string(emb.legs.size()));

  std::vector<int> lengths;
  std::vector<char> used(g.order(), 0);
  used[emb.root] = 1;
  for (std::size_t i = 0; i < emb.legs.size(); ++i) {
    const auto& leg = emb.legs[i];
    const std::string tag = "leg " + std::to_string(i) + ": ";
    if (leg.size() < 2) return fail(tag + "has no edges");
    if (leg.front() != emb.root) return fail(tag + "does not start at the root");
    for (std::size_t j = 1; j < leg.size(); ++j) {
      Vertex v = leg[j];
      if (!g.contains(v)) return fail(tag + "vertex " + std::to_string(v) + " out of range");
      if (!g.has_edge(leg[j - 1], v))
        return fail(tag + "missing edge " + std::to_string(leg[j - 1]) + "-" + std::to_string(v));
      if (used[v]) return fail(tag + "vertex " + std::to_string(v) + " used twice");
      used[v] = 1;
    }
    lengths.push_back(static_cast<int>(leg.size()) - 1);
  }
  std::sort(lengths.begin(), lengths.end());
  if (lengths != shape.legs()) return fail("leg lengths do not match the shape " + shape.to_string());
  return {};
}

std::string embedding_to_json(const SpiderEmbedding& emb) {
  nlohmann::json j;
  j["root"] = emb.root;
  j["legs"] = emb.legs;
  return j.dump();
}

SpiderEmbedding embedding_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  SpiderEmbedding emb;
  emb.root = j.at("root").get<Vertex>();
  emb.legs = j.at("legs").get<std::vector<std::vector<Vertex>>>();
  return emb;
}

std::vector<SpiderShape> enumerate_shapes(int k, int legs) {
  if (k < 1) throw PreconditionError("enumerate_shapes needs k >= 1");
  if (legs < 0 || legs > k) throw PreconditionError("leg count must lie in [1, k]");
  std::vector<SpiderShape> out;
  std::vector<int> parts;
  // Non-decreasing parts, smallest first, gives lexicographic order directly.
  std::function<void(int, int)> rec = [&](int remaining, int min_part) {
    if (remaining == 0) {
      if (legs == 0 || static_cast<int>(parts.size()) == legs) out.emplace_back(parts);
      return;
    }
    if (legs > 0 && static_cast<int>(parts.size()) >= legs) return;
    for (int p = min_part; p <= remaining; ++p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(k, 1);
  return out;
}

}  // namespace spider
