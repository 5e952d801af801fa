#pragma once

#include <string>
#include <utility>
#include <vector>

#include "spantree/ga.hpp"
#include "spantree/graph.hpp"
#include "spantree/metrics.hpp"

namespace spantree {

/// One peeling run. Node mode fills top_nodes (the high-degree candidates,
/// degree measured in that run's dense spanning tree) and removed_path; edge
/// mode fills removed_edges (the tree edges tied at maximum degree sum).
struct PeelRun {
  std::vector<std::pair<int, int>> top_nodes;        // (vertex id, tree degree)
  std::vector<int> removed_path;                     // vertex ids along the tree path
  std::vector<std::pair<int, int>> removed_edges;    // endpoint ids
};

/// Record of a recursive peeling analysis. The strength score is the number
/// of runs (each removing at least one edge) before the network disconnects.
struct PeelingReport {
  std::vector<PeelRun> runs;
  int strength_score = 0;
  std::string terminated_reason = "disconnected";
};

/// Repeatedly: solve a dense spanning tree of the current network, pick the
/// two highest-degree tree vertices (ties broken by the seeded generator),
/// remove the edges of the tree path between them, stop once disconnected.
/// Vertices are never deleted; a vertex left isolated disconnects the
/// network.
PeelingReport peel_nodes(const Graph& g, const ObjectiveSpec& spec, const GaConfig& cfg);

/// Same loop, but removes every tree edge attaining the maximum endpoint
/// degree sum (degrees within the tree).
PeelingReport peel_edges(const Graph& g, const ObjectiveSpec& spec, const GaConfig& cfg);

}  // namespace spantree
