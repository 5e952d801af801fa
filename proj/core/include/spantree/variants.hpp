#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spantree/ga.hpp"
#include "spantree/graph.hpp"
#include "spantree/metrics.hpp"

namespace spantree {

/// Constrained dense/sparse subtree problems.
struct VariantSpec {
  enum class Kind { k_subtree, steiner, conflict_pairs, degree_bound };

  Kind kind = Kind::k_subtree;
  int k = 0;                                     // k_subtree vertex count / degree bound
  std::vector<int> terminals;                    // steiner, vertex ids
  std::vector<std::pair<int, int>> conflicts;    // conflicting edge label pairs
  ObjectiveSpec base;

  static VariantSpec k_subtree_of(int k, ObjectiveSpec base);
  static VariantSpec steiner_of(std::vector<int> terminals, ObjectiveSpec base);
  static VariantSpec conflicts_of(std::vector<std::pair<int, int>> pairs, ObjectiveSpec base);
  static VariantSpec degree_bound_of(int k, ObjectiveSpec base);

  /// CLI syntax: "k-subtree:6", "steiner:a,b,c" (vertex names),
  /// "conflicts:13-16,2-5" (label pairs), "degree-bound:3".
  static VariantSpec parse(const Graph& g, std::string_view text, ObjectiveSpec base);
  std::string kind_name() const;

  void validate(const Graph& g) const;
};

/// GA search under the variant's constraint; infeasible individuals are
/// penalized, never discarded.
SolveResult solve_variant(const Graph& g, const VariantSpec& v, const GaConfig& cfg);

/// Independent re-check that a result satisfies the variant constraint: tree
/// shape via DFS, exact vertex count for k-subtree, terminal containment,
/// absent conflict pairs, bounded degrees.
bool variant_satisfied(const Graph& g, const VariantSpec& v, const EdgeSelection& tree_labels);

}  // namespace spantree
