#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "spantree/bigint.hpp"
#include "spantree/graph.hpp"
#include "spantree/rng.hpp"

namespace spantree {

struct KruskalResult {
  std::vector<int> tree_labels;  // maximal forest, acceptance order
  int component_count = 0;       // over all host vertices
  bool is_spanning_tree = false;
};

/// Kruskal restricted to the selected edges, sorted by weight ascending with
/// chromosome position as the tiebreak. Disconnected subgraphs yield the
/// maximal forest, flagged via is_spanning_tree / component_count.
KruskalResult kruskal_decode(const Graph& g, const EdgeSelection& sel);

/// Labels of a spanning tree produced by feeding a uniformly shuffled edge
/// order to Kruskal. Every spanning tree has positive probability; the
/// distribution is not uniform. Throws on disconnected graphs.
EdgeSelection random_spanning_tree(const Graph& g, Rng& rng);

/// Exact spanning tree count by the matrix-tree theorem (fraction-free
/// integer elimination of a Laplacian minor). 0 for disconnected graphs.
BigInt spanning_tree_count(const Graph& g);

class EnumerationCapExceeded : public std::runtime_error {
 public:
  EnumerationCapExceeded(const BigInt& count, std::uint64_t cap)
      : std::runtime_error("spanning tree count " + count.str() +
                           " exceeds enumeration cap " + std::to_string(cap)),
        count_(count) {}
  const BigInt& count() const { return count_; }

 private:
  BigInt count_;
};

/// Visits every spanning tree exactly once, labels ascending within each
/// selection. No cap check; see enumerate_spanning_trees.
void for_each_spanning_tree(const Graph& g,
                            const std::function<void(const EdgeSelection&)>& visit);

/// Collects all spanning trees after checking the count against cap; throws
/// EnumerationCapExceeded (with the exact count) when over.
std::vector<EdgeSelection> enumerate_spanning_trees(const Graph& g,
                                                    std::uint64_t cap = 1000000);

}  // namespace spantree
