#include "spantree/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace spantree {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json objective_json(const ObjectiveSpec& spec) {
  ordered_json obj;
  obj["spec"] = spec.to_string();
  obj["sense"] = to_string(spec.sense);
  return obj;
}

ordered_json edge_names(const Graph& g, const EdgeSelection& labels) {
  ordered_json edges = ordered_json::array();
  for (int label : labels) {
    const Edge& e = g.edge(label);
    edges.push_back({g.vertex_name(e.u), g.vertex_name(e.v)});
  }
  return edges;
}

}  // namespace

std::string solve_report_json(const Graph& g, const std::string& command,
                              const ObjectiveSpec& spec, const SolveResult& result,
                              std::optional<int> model, std::optional<std::uint64_t> seed,
                              const VariantSpec* variant) {
  ordered_json report;
  report["schema_version"] = 1;
  report["command"] = command;
  report["objective"] = objective_json(spec);
  if (variant) {
    ordered_json v;
    v["kind"] = variant->kind_name();
    switch (variant->kind) {
      case VariantSpec::Kind::k_subtree:
      case VariantSpec::Kind::degree_bound:
        v["k"] = variant->k;
        break;
      case VariantSpec::Kind::steiner: {
        ordered_json terminals = ordered_json::array();
        for (int t : variant->terminals) terminals.push_back(g.vertex_name(t));
        v["terminals"] = terminals;
        break;
      }
      case VariantSpec::Kind::conflict_pairs: {
        ordered_json pairs = ordered_json::array();
        for (auto [a, b] : variant->conflicts) pairs.push_back({a, b});
        v["pairs"] = pairs;
        break;
      }
    }
    report["variant"] = v;
  }
  if (model) report["model"] = *model;
  if (seed) report["seed"] = *seed;
  report["feasible"] = result.feasible;
  if (result.feasible) {
    report["best_value"] = result.best_value;
    report["edge_labels"] = result.best_selection;
    report["edges"] = edge_names(g, result.best_selection);
  }
  report["generations"] = result.generations_run;
  report["best_found_generation"] = result.best_found_generation;
  report["evaluations"] = result.evaluations;
  report["history"] = result.history;
  report["wall_time_ms"] = result.wall_time_ms;
  return report.dump(2) + "\n";
}

std::string peel_report_json(const Graph& g, const std::string& command,
                             const ObjectiveSpec& spec, std::uint64_t seed,
                             const PeelingReport& report) {
  ordered_json out;
  out["schema_version"] = 1;
  out["command"] = command;
  out["objective"] = objective_json(spec);
  out["seed"] = seed;
  out["strength_score"] = report.strength_score;
  out["terminated_reason"] = report.terminated_reason;
  ordered_json runs = ordered_json::array();
  for (const PeelRun& run : report.runs) {
    ordered_json r;
    if (!run.top_nodes.empty()) {
      ordered_json top = ordered_json::array();
      for (auto [v, d] : run.top_nodes) top.push_back({g.vertex_name(v), d});
      r["top_nodes"] = top;
    }
    if (!run.removed_path.empty()) {
      ordered_json path = ordered_json::array();
      for (int v : run.removed_path) path.push_back(g.vertex_name(v));
      r["removed_path"] = path;
    }
    if (!run.removed_edges.empty()) {
      ordered_json edges = ordered_json::array();
      for (auto [u, v] : run.removed_edges)
        edges.push_back({g.vertex_name(u), g.vertex_name(v)});
      r["removed_edges"] = edges;
    }
    runs.push_back(r);
  }
  out["runs"] = runs;
  return out.dump(2) + "\n";
}

std::string peel_report_table(const Graph& g, const PeelingReport& report, bool node_mode) {
  std::ostringstream out;
  out << std::left << std::setw(6) << "Run";
  if (node_mode)
    out << std::setw(40) << "(Node, Degree)" << "Removed Path\n";
  else
    out << "Removed Edges\n";

  int run_no = 0;
  for (const PeelRun& run : report.runs) {
    ++run_no;
    out << std::left << std::setw(6) << run_no;
    if (node_mode) {
      std::string tops;
      for (std::size_t i = 0; i < run.top_nodes.size(); ++i) {
        auto [v, d] = run.top_nodes[i];
        tops += (i ? ", " : "") + ("(" + g.vertex_name(v) + ", " + std::to_string(d) + ")");
      }
      out << std::setw(40) << tops;
      for (std::size_t i = 0; i < run.removed_path.size(); ++i)
        out << (i ? " - " : "") << g.vertex_name(run.removed_path[i]);
    } else {
      for (std::size_t i = 0; i < run.removed_edges.size(); ++i) {
        auto [u, v] = run.removed_edges[i];
        out << (i ? ", " : "") << "(" << g.vertex_name(u) << " - " << g.vertex_name(v) << ")";
      }
    }
    out << '\n';
  }
  out << "Network disconnected after " << report.strength_score << " run(s); strength score "
      << report.strength_score << ".\n";
  return out.str();
}

}  // namespace spantree
