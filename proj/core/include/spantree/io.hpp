#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spantree/graph.hpp"
#include "spantree/rng.hpp"

namespace spantree {

enum class GraphFormat { edge_list, adjacency_csv };

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Edge list: one `u v [w]` per line, whitespace separated, `#` comments and
/// blank lines ignored. Adjacency CSV: an NxN numeric matrix, nonzero = edge
/// with that weight, scanned row-major over the upper triangle. Disconnected
/// inputs are rejected.
Graph load_graph(std::istream& in, GraphFormat format);
Graph load_graph_file(const std::string& path,
                      std::optional<GraphFormat> format = std::nullopt);

/// Writes the edge-list format; round-trips edge order, labels and names.
void write_edge_list(std::ostream& out, const Graph& g);

/// DOT export. With tree_labels, tree edges are drawn solid black and the
/// remaining host edges gray (or dropped when include_nontree is false).
std::string to_dot(const Graph& g);
std::string to_dot(const Graph& g, const std::vector<int>& tree_labels, bool include_nontree);
/// DOT for a standalone tree (greedy trees); vertices named 1..n.
std::string tree_to_dot(const TreeView& t);

struct GeneratedGraph {
  Graph graph;
  std::optional<int> hub;                // planted star center
  std::optional<std::vector<int>> path;  // planted Hamiltonian path
};

/// Random n-vertex, m-edge graph. planted_star makes some vertex adjacent to
/// all others; planted_path includes a Hamiltonian path; require_connected
/// guarantees connectivity even without planted structures. Edge order is
/// shuffled before labeling.
GeneratedGraph gen_random_graph(int n, int m, Rng& rng, bool require_connected,
                                bool planted_star, bool planted_path);

}  // namespace spantree
