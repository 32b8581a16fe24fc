#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spider {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Thrown when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ParseErrorKind { Syntax, SelfLoop, DuplicateEdge, OutOfRange, CountMismatch };

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, int line, const std::string& what);
  ParseErrorKind kind() const noexcept { return kind_; }
  /// 1-based line number of the offending input line (0 when the input ended early).
  int line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  int line_;
};

/// Undirected simple graph on vertices 0..n-1. Immutable after construction;
/// neighbor lists are kept sorted so every traversal is deterministic.
class Graph {
 public:
  Graph() = default;
  /// Throws PreconditionError on self-loops, duplicates or out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const noexcept { return static_cast<int>(adj_.size()); }
  std::int64_t size() const noexcept { return m_; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < order(); }

  /// Edges (u < v) in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::int64_t m_ = 0;
};

/// Exact rational average degree avg_num / avg_den = 2m / n.
struct DegreeStats {
  int min_degree = 0;
  int max_degree = 0;
  std::int64_t avg_num = 0;
  std::int64_t avg_den = 1;
};

Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph read_graph_file(const std::string& path);
/// Mirrors the parse format; edges sorted lexicographically.
std::string serialize(const Graph& g);

DegreeStats degree_stats(const Graph& g);

/// 2m > n(k-1), i.e. average degree strictly above k-1.
bool exceeds_threshold(const Graph& g, int k);

bool is_connected(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// old index -> new index, -1 for dropped vertices.
  std::vector<Vertex> to_new;
  /// new index -> old index.
  std::vector<Vertex> to_old;
};

/// Keeps exactly the vertices in `keep`, relabeled in ascending original order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

}  // namespace spider
