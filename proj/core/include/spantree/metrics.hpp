#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spantree/bigint.hpp"
#include "spantree/graph.hpp"

namespace spantree {

enum class Sense { minimize, maximize };

std::string to_string(Sense s);
Sense parse_sense(std::string_view text);

/// Which function to optimize. The sense is always explicit; solvers apply
/// it, evaluation returns the raw value.
struct ObjectiveSpec {
  enum class Kind { c_vector, power_sum, wiener, subtree_count };

  Kind kind = Kind::power_sum;
  std::vector<double> jvec;  // c_vector exponents, one per distance
  double p = 2.0;            // power_sum exponent
  Sense sense = Sense::minimize;

  static ObjectiveSpec c_vec(std::vector<double> j, Sense s);
  static ObjectiveSpec spow(double p, Sense s);
  static ObjectiveSpec wiener_index(Sense s);
  static ObjectiveSpec subtrees(Sense s);

  /// Parses the CLI syntax: "cvec:4,2,2,2", "spow:2", "wiener", "subtrees".
  static ObjectiveSpec parse(std::string_view text, Sense sense);
  std::string to_string() const;  // without the sense

  /// Distance depth a TreeView must be populated to, given the tree order.
  int required_depth(int order) const;
  /// Depth to which explicit pair lists are needed (0 = counts suffice).
  int required_pair_depth() const;
  /// Largest degree exponent appearing in the objective (penalty sizing).
  double largest_exponent() const;

  void validate(int vertex_count) const;
};

/// Sum over unordered pairs at distance i of deg(u)^j + deg(v)^j.
double c_ij(const TreeView& t, int i, double j);

/// Sum of c_ij(t, i, j[i-1]) for i = 1..|j|.
double c_vector(const TreeView& t, std::span<const double> jvec);

/// Sum of the p-th powers of all vertex degrees.
double power_sum(const TreeView& t, double p);

/// Sum of distances between all pairs of tree vertices.
double wiener(const TreeView& t);

/// Number of nonempty subtrees, counted exactly.
BigInt subtree_count(const TreeView& t);

/// Raw objective value; the sense is not applied here.
double evaluate(const TreeView& t, const ObjectiveSpec& spec);

}  // namespace spantree
