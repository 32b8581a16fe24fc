#include "spider/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace spider {

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

Graph::Graph(int n, std::span<const Edge> edges) {
  if (n < 0) throw PreconditionError("negative vertex count");
  adj_.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw PreconditionError("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw PreconditionError("duplicate edge");
  }
  m_ = static_cast<std::int64_t>(edges.size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  return std::binary_search(a.begin(), a.end(), &a == &adj_[u] ? v : u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

namespace {

bool skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

// Reads exactly two integers and nothing else.
bool read_pair(const std::string& line, long long& a, long long& b) {
  std::istringstream ss(line);
  if (!(ss >> a >> b)) return false;
  std::string rest;
  return !(ss >> rest);
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    if (!read_pair(line, n, m) || n < 0 || m < 0)
      throw ParseError(ParseErrorKind::Syntax, lineno, "expected header \"n m\"");
    break;
  }
  if (n < 0) throw ParseError(ParseErrorKind::Syntax, lineno, "missing header \"n m\"");

  std::vector<Edge> edges;
  std::vector<Edge> seen;
  edges.reserve(static_cast<std::size_t>(m));
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    long long u = 0, v = 0;
    if (!read_pair(line, u, v)) throw ParseError(ParseErrorKind::Syntax, lineno, "expected edge \"u v\"");
    if (static_cast<long long>(edges.size()) == m)
      throw ParseError(ParseErrorKind::CountMismatch, lineno,
                       "more edges than the declared " + std::to_string(m));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(ParseErrorKind::OutOfRange, lineno,
                       "vertex out of range [0," + std::to_string(n) + ")");
    if (u == v) throw ParseError(ParseErrorKind::SelfLoop, lineno, "self-loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    Edge key{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    auto it = std::lower_bound(seen.begin(), seen.end(), key);
    if (it != seen.end() && *it == key)
      throw ParseError(ParseErrorKind::DuplicateEdge, lineno,
                       "duplicate edge " + std::to_string(key.first) + " " + std::to_string(key.second));
    seen.insert(it, key);
  }
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(ParseErrorKind::CountMismatch, lineno,
                     "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Graph(static_cast<int>(n), edges);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_edge_list(in);
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

DegreeStats degree_stats(const Graph& g) {
  if (g.order() < 1) throw PreconditionError("degree_stats needs n >= 1");
  DegreeStats s;
  s.min_degree = g.degree(0);
  s.max_degree = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    s.min_degree = std::min(s.min_degree, g.degree(v));
    s.max_degree = std::max(s.max_degree, g.degree(v));
  }
  s.avg_num = 2 * g.size();
  s.avg_den = g.order();
  return s;
}

bool exceeds_threshold(const Graph& g, int k) {
  return 2 * g.size() > static_cast<std::int64_t>(g.order()) * (k - 1);
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.order();
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  if (keep.empty()) throw PreconditionError("induced_subgraph: empty vertex set");
  InducedSubgraph out;
  out.to_new.assign(g.order(), -1);
  for (Vertex v : keep) {
    if (!g.contains(v)) throw PreconditionError("induced_subgraph: vertex out of range");
    out.to_new[v] = 0;
  }
  for (Vertex v = 0; v < g.order(); ++v)
    if (out.to_new[v] == 0) {
      out.to_new[v] = static_cast<Vertex>(out.to_old.size());
      out.to_old.push_back(v);
    }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (out.to_new[u] >= 0 && out.to_new[v] >= 0) edges.emplace_back(out.to_new[u], out.to_new[v]);
  out.graph = Graph(static_cast<int>(out.to_old.size()), edges);
  return out;
}

}  // namespace spider
