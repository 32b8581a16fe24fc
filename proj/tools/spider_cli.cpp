// spider: command line front end for the embedding library.
//
// Exit codes: 0 embedded / found / valid, 1 absent / invalid, 2 budget
// exhausted, 3 precondition or input error, 4 proof discrepancy.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "spider/dense.hpp"
#include "spider/embed.hpp"
#include "spider/scan.hpp"

using namespace spider;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kAbsent = 1, kExhausted = 2, kPrecondition = 3, kDiscrepancy = 4 };

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Graph load(const std::string& path) { return parse_edge_list(slurp(path)); }

int search_exit(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return kOk;
    case SearchStatus::None: return kAbsent;
    case SearchStatus::Exhausted: return kExhausted;
  }
  return kAbsent;
}

int embed_exit(EmbedStatus s) {
  switch (s) {
    case EmbedStatus::Embedded: return kOk;
    case EmbedStatus::Absent: return kAbsent;
    case EmbedStatus::BudgetExhausted: return kExhausted;
    case EmbedStatus::ProofDiscrepancy: return kDiscrepancy;
  }
  return kAbsent;
}

json cycle_json(const CycleSearch& r) {
  json j{{"status", to_string(r.status)}};
  if (r.cycle) {
    j["cycle"] = r.cycle->order;
    j["length"] = r.cycle->length();
    j["maximal"] = r.cycle->maximal;
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spider embeddings in dense graphs"};
  app.require_subcommand(1);
  std::int64_t budget = budget_from_env();
  std::string graph_path, cert_path, shape_text, config_path, out_path;
  int k = 0, legs = 0, through = 0, min_len = 0, root = -1;
  bool oracle_only = false, with_trace = false;

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "search node budget (default: SPIDER_BUDGET or 10^7)")
        ->check(CLI::PositiveNumber);
  };

  auto* peel = app.add_subcommand("peel", "peel to the dense core and print the removal log");
  peel->add_option("--k", k, "spider size")->required();
  peel->add_option("graph", graph_path)->required();

  auto* cycle = app.add_subcommand("cycle", "longest cycle through a vertex");
  cycle->add_option("--through", through, "vertex")->required();
  cycle->add_option("--min", min_len, "fail unless the cycle has at least this length");
  cycle->add_option("graph", graph_path)->required();
  add_budget(cycle);

  auto* hamilton = app.add_subcommand("hamilton", "hamiltonian cycle");
  hamilton->add_option("graph", graph_path)->required();
  add_budget(hamilton);

  auto* embed = app.add_subcommand("embed", "embed a spider with the dispatcher");
  embed->add_option("--shape", shape_text, "leg lengths, e.g. 1,2,2,3")->required();
  embed->add_flag("--oracle-only", oracle_only, "skip the constructive routes");
  embed->add_flag("--trace", with_trace, "include the construction trace");
  embed->add_option("graph", graph_path)->required();
  add_budget(embed);

  auto* oracle = app.add_subcommand("oracle", "exhaustive search for a spider");
  oracle->add_option("--shape", shape_text)->required();
  oracle->add_option("--root", root, "fix the root vertex");
  oracle->add_option("graph", graph_path)->required();
  add_budget(oracle);

  auto* shapes = app.add_subcommand("shapes", "list spider shapes of size k");
  shapes->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  shapes->add_option("--legs", legs, "only shapes with this many legs");

  auto* validate = app.add_subcommand("validate", "check a certificate against a graph");
  validate->add_option("graph", graph_path)->required();
  validate->add_option("cert", cert_path)->required();

  auto* scan = app.add_subcommand("scan", "run a conjecture scan");
  scan->add_option("--config", config_path)->required();
  scan->add_option("--out", out_path, "write the JSONL report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kPrecondition;
  }

  try {
    if (*peel) {
      const Graph g = load(graph_path);
      auto r = minimal_dense_subgraph(g, k);
      for (const auto& rem : r.removed) std::cout << "removed " << rem.vertex << " degree " << rem.degree << '\n';
      std::cout << "kept";
      for (Vertex v : r.to_old) std::cout << ' ' << v;
      std::cout << '\n' << serialize(r.subgraph);
      return kOk;
    }
    if (*cycle) {
      const Graph g = load(graph_path);
      if (!g.contains(through)) throw PreconditionError("vertex out of range");
      SearchBudget b(budget);
      auto r = max_cycle_through(g, through, b);
      json j = cycle_json(r);
      int code = search_exit(r.status);
      if (min_len > 0 && code == kOk) {
        j["meets_min"] = r.cycle->length() >= min_len;
        if (r.cycle->length() < min_len) code = kAbsent;
      }
      std::cout << j.dump() << '\n';
      return code;
    }
    if (*hamilton) {
      const Graph g = load(graph_path);
      SearchBudget b(budget);
      auto r = hamiltonian_cycle(g, b);
      std::cout << cycle_json(r).dump() << '\n';
      return search_exit(r.status);
    }
    if (*embed) {
      const Graph g = load(graph_path);
      const auto shape = SpiderShape::parse(shape_text);
      auto out = embed_any(g, shape.size(), shape, {budget, oracle_only});
      if (out.status == EmbedStatus::ProofDiscrepancy) {
        std::cout << discrepancy_to_json(g, shape, out) << '\n';
        return kDiscrepancy;
      }
      json j{{"status", to_string(out.status)}, {"case", to_string(out.trace.proof_case)}};
      if (out.embedding) j["embedding"] = json::parse(embedding_to_json(*out.embedding));
      if (with_trace) j["trace"] = json::parse(trace_to_json(out.trace));
      std::cout << j.dump() << '\n';
      return embed_exit(out.status);
    }
    if (*oracle) {
      const Graph g = load(graph_path);
      const auto shape = SpiderShape::parse(shape_text);
      std::optional<Vertex> r;
      if (root >= 0) {
        if (!g.contains(root)) throw PreconditionError("root out of range");
        r = root;
      }
      SearchBudget b(budget);
      auto res = oracle_embed(g, shape, r, b);
      json j{{"status", to_string(res.status)}};
      if (res.embedding) j["embedding"] = json::parse(embedding_to_json(*res.embedding));
      std::cout << j.dump() << '\n';
      return search_exit(res.status);
    }
    if (*shapes) {
      for (const auto& s : enumerate_shapes(k, legs)) std::cout << s.to_string() << '\n';
      return kOk;
    }
    if (*validate) {
      const Graph g = load(graph_path);
      const auto emb = embedding_from_json(slurp(cert_path));
      std::vector<int> lengths;
      for (const auto& leg : emb.legs) lengths.push_back(static_cast<int>(leg.size()) - 1);
      auto v = validate_embedding(g, SpiderShape(lengths), emb);
      if (v) {
        std::cout << "valid S_{" << SpiderShape(lengths).to_string() << "} rooted at " << emb.root << '\n';
        return kOk;
      }
      std::cout << "invalid: " << v.diagnostic << '\n';
      return kAbsent;
    }
    if (*scan) {
      auto cfg = parse_scan_config(slurp(config_path));
      if (cfg.budget == kDefaultBudget) cfg.budget = budget;
      auto text = report_to_jsonl(run_conjecture_scan(cfg));
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!out) throw PreconditionError("cannot write " + out_path);
        out << text;
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const json::exception& e) {
    std::cerr << "bad certificate: " << e.what() << '\n';
    return kPrecondition;
  }
  return kOk;
}
