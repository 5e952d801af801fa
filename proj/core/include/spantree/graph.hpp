#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spantree {

struct Edge {
  int u = 0;
  int v = 0;
  double weight = 1.0;
  int label = 0;  // 1-based, assigned in input order
};

/// Immutable labeled undirected graph. Edge labels run 1..|E| in input order;
/// the label matrix holds the label at (u,v) and 0 where no edge exists.
class Graph {
 public:
  // Labels on the given edges are overwritten with 1..m in order. Vertex
  // names default to the decimal vertex index.
  Graph(int vertex_count, std::vector<Edge> edges,
        std::vector<std::string> names = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int label) const { return edges_[static_cast<std::size_t>(label - 1)]; }
  bool has_label(int label) const { return label >= 1 && label <= edge_count(); }

  /// Labels of the edges incident to v.
  const std::vector<int>& incident_labels(int v) const { return incidence_[static_cast<std::size_t>(v)]; }
  /// Label at (u,v), 0 when the edge is absent.
  int label_at(int u, int v) const { return label_matrix_[static_cast<std::size_t>(u) * n_ + v]; }

  const std::string& vertex_name(int v) const { return names_[static_cast<std::size_t>(v)]; }
  const std::vector<std::string>& vertex_names() const { return names_; }
  std::optional<int> vertex_by_name(const std::string& name) const;

  bool is_connected() const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::string> names_;
  std::vector<std::vector<int>> incidence_;
  std::vector<int> label_matrix_;
};

/// Ordered vector of distinct edge labels: the chromosome of both GA models.
using EdgeSelection = std::vector<int>;

// Throws std::invalid_argument on duplicate or out-of-range labels.
void validate_selection(const Graph& g, const EdgeSelection& sel);

/// A decoded tree (spanning tree or k-vertex subtree) with per-vertex degrees
/// and truncated distance data. pair_count[i-1] is the number of unordered
/// vertex pairs at tree distance i; when pairs_stored, pairs_at[i-1] lists
/// them explicitly.
struct TreeView {
  int host_vertex_count = 0;
  int order = 0;  // number of vertices spanned by the tree
  std::vector<int> vertices;
  std::vector<int> edge_labels;
  std::vector<std::array<int, 2>> edge_ends;
  std::vector<int> degree;              // indexed by host vertex id
  std::vector<std::vector<int>> adj;    // tree adjacency, host vertex ids
  int depth = 0;                        // pair_count populated for 1..depth
  bool pairs_stored = false;
  std::vector<std::vector<std::pair<int, int>>> pairs_at;
  std::vector<std::int64_t> pair_count;

  std::int64_t pairs_at_distance(int i) const {
    return (i >= 1 && i <= depth) ? pair_count[static_cast<std::size_t>(i - 1)] : 0;
  }
};

struct DecodeResult {
  std::optional<TreeView> tree;  // engaged iff the selection spans a tree
  int component_count = 0;       // over all host vertices
};

/// Decodes an (N-1)-edge selection. Distances are computed by breadth-first
/// traversal truncated at depth i_max; set store_pairs = false when only the
/// pair counts are needed (Wiener). Throws on |sel| != N-1.
DecodeResult decode_tree(const Graph& g, const EdgeSelection& sel, int i_max,
                         bool store_pairs = true);

struct SubtreeDecodeResult {
  std::optional<TreeView> tree;  // engaged iff sel is a tree on |sel|+1 vertices
  int component_count = 0;       // among vertices touched by sel
  int touched = 0;
  bool has_cycle = false;
};

/// Decodes an edge selection as a subtree on exactly |sel|+1 vertices.
SubtreeDecodeResult decode_subtree(const Graph& g, const EdgeSelection& sel,
                                   int i_max, bool store_pairs = true);

/// Builds a TreeView for an explicit tree edge set (host vertex ids).
TreeView build_tree_view(int host_vertex_count,
                         const std::vector<std::array<int, 2>>& ends,
                         const std::vector<int>& labels, int i_max,
                         bool store_pairs);

/// Nonincreasing sequence of positive vertex degrees.
using DegreeSequence = std::vector<int>;

bool is_tree_degree_sequence(const DegreeSequence& seq);

/// The greedy tree of a realizable degree sequence: the root takes the
/// largest degree and each breadth-first layer receives the largest remaining
/// degrees, children assigned in order of parent degree. Vertex 0 is the
/// root; edge labels run 1..n-1 in construction order.
TreeView greedy_tree(const DegreeSequence& seq);

/// True iff the sequences have equal sums and every prefix sum of a is >= the
/// corresponding prefix sum of b.
bool majorizes(const DegreeSequence& a, const DegreeSequence& b);

}  // namespace spantree
