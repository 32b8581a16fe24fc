#include <algorithm>
#include <chrono>
#include <sstream>

#include "json.hpp"
#include "spider/scan.hpp"

namespace spider {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::pair<int, int> parse_range(const std::string& key, const std::string& value) {
  auto dots = value.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(value);
      return {v, v};
    }
    return {std::stoi(value.substr(0, dots)), std::stoi(value.substr(dots + 2))};
  } catch (const std::exception&) {
    throw PreconditionError("bad range for " + key + ": '" + value + "'");
  }
}

template <class E>
E parse_enum(const std::string& key, const std::string& value,
             std::initializer_list<std::pair<const char*, E>> options) {
  for (auto& [name, e] : options)
    if (value == name) return e;
  throw PreconditionError("bad value for " + key + ": '" + value + "'");
}

const char* name(ScanMode m) { return m == ScanMode::Exhaustive ? "exhaustive" : "random"; }
const char* name(ScanFamily f) {
  switch (f) {
    case ScanFamily::Dense: return "dense";
    case ScanFamily::Hamiltonian: return "hamiltonian";
    case ScanFamily::TwoConnected: return "two_connected";
  }
  return "?";
}
const char* name(ScanRoute r) {
  switch (r) {
    case ScanRoute::Constructive: return "constructive";
    case ScanRoute::Oracle: return "oracle";
    case ScanRoute::Both: return "both";
  }
  return "?";
}
const char* name(ShapeFilter s) { return s == ShapeFilter::All ? "all" : "four_leg"; }

void validate(const ScanConfig& cfg) {
  if (cfg.n_min < 1 || cfg.n_min > cfg.n_max) throw PreconditionError("invalid n_range");
  if (cfg.k_min < 1 || cfg.k_min > cfg.k_max) throw PreconditionError("invalid k_range");
  if (cfg.mode == ScanMode::Exhaustive && cfg.n_max > 8)
    throw PreconditionError("exhaustive mode requires n <= 8");
  if (cfg.samples < 0) throw PreconditionError("samples must be non-negative");
  if (cfg.budget <= 0) throw PreconditionError("budget must be positive");
}

std::vector<SpiderShape> shapes_for(const ScanConfig& cfg, int k) {
  auto all = enumerate_shapes(k);
  if (cfg.shapes == ShapeFilter::All) return all;
  std::vector<SpiderShape> out;
  for (auto& s : all)
    if (s.is_one_leg_four_spider()) out.push_back(s);
  return out;
}

class Scanner {
 public:
  explicit Scanner(const ScanConfig& cfg) : cfg_(cfg) { report_.config = cfg; }

  // Graph-level hypothesis gate; `hamiltonian_known` skips the search when the
  // generator planted a cycle.
  bool admits(const Graph& g, int k, bool hamiltonian_known) {
    if (!exceeds_threshold(g, k)) return false;
    if (cfg_.require_connected && !is_connected(g)) return false;
    switch (cfg_.family) {
      case ScanFamily::Dense: return true;
      case ScanFamily::TwoConnected: return is_two_connected(g);
      case ScanFamily::Hamiltonian: {
        if (hamiltonian_known) return true;
        if (g.order() < 3) return false;
        SearchBudget budget(cfg_.budget);
        return hamiltonian_cycle(g, budget).status == SearchStatus::Found;
      }
    }
    return false;
  }

  void test(const Graph& g, int k) {
    auto shapes = shapes_for(cfg_, k);
    if (shapes.empty()) return;
    ++report_.totals.graphs;
    const std::string id = graph_id(g);
    for (const auto& shape : shapes) {
      ScanRow row{id, g.order(), g.size(), k, shape, {}, {}, {}};
      ++report_.totals.shapes;
      bool found = false, absent = false;
      if (cfg_.route != ScanRoute::Oracle) {
        DispatchOptions opts{cfg_.budget, false};
        auto out = embed_any(g, k, shape, opts);
        row.constructive = out.status;
        row.proof_case = out.trace.proof_case;
        if (out.status == EmbedStatus::ProofDiscrepancy)
          report_.discrepancies.push_back(discrepancy_to_json(g, shape, out));
        if (out.status == EmbedStatus::BudgetExhausted) ++report_.totals.budget_exhausted;
        found |= out.embedded();
        absent |= out.status == EmbedStatus::Absent;
      }
      if (cfg_.route != ScanRoute::Constructive) {
        SearchBudget budget(cfg_.budget);
        auto res = oracle_embed(g, shape, std::nullopt, budget);
        row.oracle = res.status;
        if (res.status == SearchStatus::Exhausted) ++report_.totals.budget_exhausted;
        found |= res.status == SearchStatus::Found;
        absent |= res.status == SearchStatus::None;
      }
      if (row.constructive && row.oracle && *row.constructive != EmbedStatus::BudgetExhausted &&
          *row.oracle != SearchStatus::Exhausted && *row.constructive != EmbedStatus::ProofDiscrepancy) {
        ++report_.totals.comparisons;
        if ((*row.constructive == EmbedStatus::Embedded) == (*row.oracle == SearchStatus::Found))
          ++report_.totals.agreements;
      }
      if (found) ++report_.totals.embeddings;
      if (absent) report_.counterexamples.push_back({serialize(g), shape});
      report_.rows.push_back(std::move(row));
    }
  }

  void run_exhaustive() {
    for (int n = cfg_.n_min; n <= cfg_.n_max; ++n)
      enumerate_labeled_graphs(n, nullptr, [&](const Graph& g) {
        for (int k = cfg_.k_min; k <= cfg_.k_max; ++k)
          if (admits(g, k, false)) test(g, k);
      });
  }

  void run_random() {
    Rng rng(cfg_.seed);
    for (int i = 0; i < cfg_.samples; ++i) {
      const int k = rng.between(cfg_.k_min, cfg_.k_max);
      const int n_lo = std::max(cfg_.n_min, k + 1);
      const std::uint64_t graph_seed = rng.next();
      if (n_lo > cfg_.n_max) continue;  // no simple graph on n <= n_max reaches the threshold
      const int n = rng.between(n_lo, cfg_.n_max);
      const std::int64_t max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
      const std::int64_t min_edges = static_cast<std::int64_t>(n) * (k - 1) / 2 + 1;
      Graph g;
      bool planted = false;
      switch (cfg_.family) {
        case ScanFamily::Dense: g = gen_random_dense(n, k, graph_seed); break;
        case ScanFamily::Hamiltonian:
        case ScanFamily::TwoConnected: {
          const std::int64_t lo = std::max<std::int64_t>(n, min_edges);
          if (lo > max_edges || n < 3) continue;
          const std::int64_t m = lo + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(
                                          std::min<std::int64_t>(n, max_edges - lo) + 1)));
          g = gen_hamiltonian(n, static_cast<int>(m - n), graph_seed).graph;
          planted = true;
          break;
        }
      }
      if (admits(g, k, planted)) test(g, k);
    }
  }

  ScanReport finish() {
    std::stable_sort(report_.rows.begin(), report_.rows.end(), [](const ScanRow& a, const ScanRow& b) {
      if (a.graph_id != b.graph_id) return a.graph_id < b.graph_id;
      if (a.k != b.k) return a.k < b.k;
      return a.shape < b.shape;
    });
    return std::move(report_);
  }

 private:
  const ScanConfig& cfg_;
  ScanReport report_;
};

}  // namespace

ScanConfig parse_scan_config(const std::string& text) {
  ScanConfig cfg;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw PreconditionError("expected key=value, got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "n_range") {
        std::tie(cfg.n_min, cfg.n_max) = parse_range(key, value);
      } else if (key == "k_range") {
        std::tie(cfg.k_min, cfg.k_max) = parse_range(key, value);
      } else if (key == "mode") {
        cfg.mode = parse_enum<ScanMode>(key, value, {{"exhaustive", ScanMode::Exhaustive}, {"random", ScanMode::Random}});
      } else if (key == "samples") {
        cfg.samples = std::stoi(value);
      } else if (key == "seed") {
        cfg.seed = std::stoull(value);
      } else if (key == "family") {
        cfg.family = parse_enum<ScanFamily>(key, value,
                                            {{"dense", ScanFamily::Dense},
                                             {"hamiltonian", ScanFamily::Hamiltonian},
                                             {"two_connected", ScanFamily::TwoConnected}});
      } else if (key == "budget") {
        cfg.budget = std::stoll(value);
      } else if (key == "route") {
        cfg.route = parse_enum<ScanRoute>(
            key, value,
            {{"constructive", ScanRoute::Constructive}, {"oracle", ScanRoute::Oracle}, {"both", ScanRoute::Both}});
      } else if (key == "shapes") {
        cfg.shapes = parse_enum<ShapeFilter>(key, value, {{"all", ShapeFilter::All}, {"four_leg", ShapeFilter::FourLeg}});
      } else if (key == "connected") {
        cfg.require_connected = parse_enum<bool>(key, value, {{"true", true}, {"false", false}});
      } else {
        throw PreconditionError("unknown config key '" + key + "'");
      }
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const PreconditionError*>(&e)) throw;
      throw PreconditionError("bad value for " + key + ": '" + value + "'");
    }
  }
  validate(cfg);
  return cfg;
}

std::string config_to_json(const ScanConfig& cfg) {
  nlohmann::ordered_json j;
  j["n_range"] = {cfg.n_min, cfg.n_max};
  j["k_range"] = {cfg.k_min, cfg.k_max};
  j["mode"] = name(cfg.mode);
  j["samples"] = cfg.samples;
  j["seed"] = cfg.seed;
  j["family"] = name(cfg.family);
  j["budget"] = cfg.budget;
  j["route"] = name(cfg.route);
  j["shapes"] = name(cfg.shapes);
  j["connected"] = cfg.require_connected;
  return j.dump();
}

ScanReport run_conjecture_scan(const ScanConfig& cfg) {
  validate(cfg);
  const auto t0 = std::chrono::steady_clock::now();
  Scanner scanner(cfg);
  if (cfg.mode == ScanMode::Exhaustive)
    scanner.run_exhaustive();
  else
    scanner.run_random();
  auto report = scanner.finish();
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

std::string report_to_jsonl(const ScanReport& report) {
  using nlohmann::ordered_json;
  std::ostringstream out;
  ordered_json header;
  header["type"] = "header";
  header["rng"] = Rng::kName;
  header["confidence"] = "empirical";
  header["config"] = ordered_json::parse(config_to_json(report.config));
  out << header.dump() << '\n';
  for (const auto& r : report.rows) {
    ordered_json j;
    j["type"] = "row";
    j["graph_id"] = r.graph_id;
    j["n"] = r.n;
    j["m"] = r.m;
    j["k"] = r.k;
    j["shape"] = r.shape.legs();
    if (r.constructive) j["constructive"] = to_string(*r.constructive);
    if (r.proof_case) j["case"] = to_string(*r.proof_case);
    if (r.oracle) j["oracle"] = to_string(*r.oracle);
    out << j.dump() << '\n';
  }
  for (const auto& d : report.discrepancies) {
    ordered_json j;
    j["type"] = "discrepancy";
    j["record"] = ordered_json::parse(d);
    out << j.dump() << '\n';
  }
  for (const auto& c : report.counterexamples) {
    ordered_json j;
    j["type"] = "counterexample";
    j["graph"] = c.graph;
    j["shape"] = c.shape.legs();
    out << j.dump() << '\n';
  }
  const auto& t = report.totals;
  ordered_json s;
  s["type"] = "summary";
  s["graphs"] = t.graphs;
  s["shapes"] = t.shapes;
  s["embeddings"] = t.embeddings;
  s["budget_exhausted"] = t.budget_exhausted;
  s["comparisons"] = t.comparisons;
  s["agreements"] = t.agreements;
  s["discrepancies"] = report.discrepancies.size();
  s["counterexamples"] = report.counterexamples.size();
  s["wall_time_s"] = report.wall_time;
  out << s.dump() << '\n';
  return out.str();
}

}  // namespace spider
