#pragma once

#include <optional>
#include <string>

#include "spantree/ga.hpp"
#include "spantree/graph.hpp"
#include "spantree/metrics.hpp"
#include "spantree/peeling.hpp"
#include "spantree/variants.hpp"

namespace spantree {

/// JSON reports, schema_version 1. Key order is fixed; identical inputs give
/// byte-identical output except for the wall_time_ms field.
std::string solve_report_json(const Graph& g, const std::string& command,
                              const ObjectiveSpec& spec, const SolveResult& result,
                              std::optional<int> model, std::optional<std::uint64_t> seed,
                              const VariantSpec* variant = nullptr);

std::string peel_report_json(const Graph& g, const std::string& command,
                             const ObjectiveSpec& spec, std::uint64_t seed,
                             const PeelingReport& report);

/// Human-readable table in the "(Node, Degree) / Removed Path / Removed
/// Edges" layout.
std::string peel_report_table(const Graph& g, const PeelingReport& report, bool node_mode);

}  // namespace spantree
