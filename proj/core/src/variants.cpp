#include "spantree/variants.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "spantree/spanning.hpp"
#include "spantree/union_find.hpp"

namespace spantree {

VariantSpec VariantSpec::k_subtree_of(int k, ObjectiveSpec base) {
  VariantSpec v;
  v.kind = Kind::k_subtree;
  v.k = k;
  v.base = std::move(base);
  return v;
}

VariantSpec VariantSpec::steiner_of(std::vector<int> terminals, ObjectiveSpec base) {
  VariantSpec v;
  v.kind = Kind::steiner;
  v.terminals = std::move(terminals);
  std::sort(v.terminals.begin(), v.terminals.end());
  v.base = std::move(base);
  return v;
}

VariantSpec VariantSpec::conflicts_of(std::vector<std::pair<int, int>> pairs,
                                      ObjectiveSpec base) {
  VariantSpec v;
  v.kind = Kind::conflict_pairs;
  v.conflicts = std::move(pairs);
  v.base = std::move(base);
  return v;
}

VariantSpec VariantSpec::degree_bound_of(int k, ObjectiveSpec base) {
  VariantSpec v;
  v.kind = Kind::degree_bound;
  v.k = k;
  v.base = std::move(base);
  return v;
}

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, sep)) parts.push_back(item);
  return parts;
}

}  // namespace

VariantSpec VariantSpec::parse(const Graph& g, std::string_view text, ObjectiveSpec base) {
  auto colon = text.find(':');
  std::string_view head = text.substr(0, colon);
  std::string_view args = colon == std::string_view::npos ? "" : text.substr(colon + 1);

  if (head == "k-subtree") return k_subtree_of(std::stoi(std::string(args)), std::move(base));
  if (head == "degree-bound") return degree_bound_of(std::stoi(std::string(args)), std::move(base));
  if (head == "steiner") {
    std::vector<int> terminals;
    for (const auto& name : split(args, ',')) {
      auto v = g.vertex_by_name(name);
      if (!v) throw std::invalid_argument("unknown terminal vertex '" + name + "'");
      terminals.push_back(*v);
    }
    return steiner_of(std::move(terminals), std::move(base));
  }
  if (head == "conflicts") {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& item : split(args, ',')) {
      auto dash = item.find('-');
      if (dash == std::string::npos)
        throw std::invalid_argument("conflict pair must look like 13-16");
      pairs.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    }
    return conflicts_of(std::move(pairs), std::move(base));
  }
  throw std::invalid_argument("unknown variant '" + std::string(text) +
                              "' (expected k-subtree:, steiner:, conflicts:, degree-bound:)");
}

std::string VariantSpec::kind_name() const {
  switch (kind) {
    case Kind::k_subtree:
      return "k-subtree";
    case Kind::steiner:
      return "steiner";
    case Kind::conflict_pairs:
      return "conflicts";
    case Kind::degree_bound:
      return "degree-bound";
  }
  return {};
}

void VariantSpec::validate(const Graph& g) const {
  switch (kind) {
    case Kind::k_subtree:
      if (k < 1 || k > g.vertex_count())
        throw std::invalid_argument("k-subtree size must be in [1, N]");
      break;
    case Kind::steiner: {
      if (terminals.size() < 2)
        throw std::invalid_argument("steiner needs at least two terminals");
      for (int t : terminals)
        if (t < 0 || t >= g.vertex_count())
          throw std::invalid_argument("terminal vertex out of range");
      for (std::size_t i = 1; i < terminals.size(); ++i)
        if (terminals[i] == terminals[i - 1])
          throw std::invalid_argument("duplicate terminal");
      break;
    }
    case Kind::conflict_pairs:
      for (auto [a, b] : conflicts) {
        if (!g.has_label(a) || !g.has_label(b))
          throw std::invalid_argument("conflict pair label out of range");
        if (a == b) throw std::invalid_argument("conflict pair needs distinct labels");
      }
      break;
    case Kind::degree_bound:
      if (k < 1) throw std::invalid_argument("degree bound must be >= 1");
      break;
  }
}

namespace {

// Keeps only vertices/edges on some terminal-to-terminal path: repeatedly
// drop non-terminal leaves.
TreeView prune_to_terminals(const Graph& g, const TreeView& spanning,
                            const std::vector<int>& terminals, int depth, bool pairs) {
  const int n = spanning.host_vertex_count;
  std::vector<char> is_terminal(static_cast<std::size_t>(n), 0);
  for (int t : terminals) is_terminal[static_cast<std::size_t>(t)] = 1;

  std::vector<int> degree = spanning.degree;
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<int> leaves;
  for (int v : spanning.vertices)
    if (degree[static_cast<std::size_t>(v)] == 1 && !is_terminal[static_cast<std::size_t>(v)])
      leaves.push_back(v);
  while (!leaves.empty()) {
    int leaf = leaves.back();
    leaves.pop_back();
    removed[static_cast<std::size_t>(leaf)] = 1;
    for (int w : spanning.adj[static_cast<std::size_t>(leaf)]) {
      if (removed[static_cast<std::size_t>(w)]) continue;
      if (--degree[static_cast<std::size_t>(w)] == 1 && !is_terminal[static_cast<std::size_t>(w)])
        leaves.push_back(w);
    }
  }

  std::vector<std::array<int, 2>> ends;
  std::vector<int> labels;
  for (std::size_t i = 0; i < spanning.edge_ends.size(); ++i) {
    auto [u, v] = spanning.edge_ends[i];
    if (!removed[static_cast<std::size_t>(u)] && !removed[static_cast<std::size_t>(v)]) {
      ends.push_back({u, v});
      labels.push_back(spanning.edge_labels[i]);
    }
  }
  return build_tree_view(n, ends, labels, depth, pairs);
}

EdgeSelection random_k_subtree(const Graph& g, int k, Rng& rng) {
  EdgeSelection genes;
  std::vector<char> in_tree(static_cast<std::size_t>(g.vertex_count()), 0);
  int start = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(g.vertex_count())));
  in_tree[static_cast<std::size_t>(start)] = 1;
  std::vector<int> members{start};
  std::vector<int> frontier;  // labels leaving the current vertex set
  auto extend_frontier = [&](int v) {
    for (int label : g.incident_labels(v)) {
      const Edge& e = g.edge(label);
      int w = e.u == v ? e.v : e.u;
      if (!in_tree[static_cast<std::size_t>(w)]) frontier.push_back(label);
    }
  };
  extend_frontier(start);
  while (static_cast<int>(members.size()) < k) {
    // Frontier entries may have become internal; resample until valid.
    int pick = static_cast<int>(rng.next_below(frontier.size()));
    int label = frontier[static_cast<std::size_t>(pick)];
    frontier[static_cast<std::size_t>(pick)] = frontier.back();
    frontier.pop_back();
    const Edge& e = g.edge(label);
    int fresh = !in_tree[static_cast<std::size_t>(e.u)]   ? e.u
                : !in_tree[static_cast<std::size_t>(e.v)] ? e.v
                                                          : -1;
    if (fresh == -1) continue;
    in_tree[static_cast<std::size_t>(fresh)] = 1;
    members.push_back(fresh);
    genes.push_back(label);
    extend_frontier(fresh);
  }
  return genes;
}

int count_conflict_violations(const VariantSpec& v, const EdgeSelection& tree_labels,
                              std::vector<char>& scratch) {
  std::fill(scratch.begin(), scratch.end(), 0);
  for (int label : tree_labels) scratch[static_cast<std::size_t>(label)] = 1;
  int violations = 0;
  for (auto [a, b] : v.conflicts)
    if (scratch[static_cast<std::size_t>(a)] && scratch[static_cast<std::size_t>(b)]) ++violations;
  return violations;
}

}  // namespace

SolveResult solve_variant(const Graph& g, const VariantSpec& v, const GaConfig& cfg) {
  cfg.validate();
  v.validate(g);
  v.base.validate(g.vertex_count());
  if (!g.is_connected())
    throw std::invalid_argument("graph is disconnected: no spanning tree exists");

  const double base_penalty = penalty_base(g, v.base);
  const Sense sense = v.base.sense;
  const int depth = v.base.required_depth(g.vertex_count());
  const bool pairs = v.base.required_pair_depth() > 0;

  if (v.kind == VariantSpec::Kind::k_subtree && v.k == 1) {
    // A 1-vertex subtree has no edges; all single vertices are equivalent.
    SolveResult trivial;
    trivial.feasible = true;
    trivial.best_found_generation = 0;
    trivial.evaluations = 1;
    trivial.best_value =
        v.base.kind == ObjectiveSpec::Kind::subtree_count ? 1.0 : 0.0;
    trivial.history.push_back(trivial.best_value);
    return trivial;
  }

  detail::GaProblem problem;
  problem.label_count = g.edge_count();

  switch (v.kind) {
    case VariantSpec::Kind::k_subtree: {
      problem.chromosome_length = v.k - 1;
      const int k = v.k;
      problem.make_individual = [&g, k](Rng& rng) { return random_k_subtree(g, k, rng); };
      problem.evaluate = [&g, spec = v.base, k, base_penalty, depth, pairs,
                          sense](const EdgeSelection& chromosome) {
        detail::FitnessEval eval;
        SubtreeDecodeResult decoded = decode_subtree(g, chromosome, depth, pairs);
        if (!decoded.tree) {
          eval.fitness = base_penalty + (decoded.component_count - 1) +
                         (decoded.has_cycle ? 1 : 0);
          return eval;
        }
        eval.raw = evaluate(*decoded.tree, spec);
        eval.fitness = detail::normalize(eval.raw, sense);
        eval.feasible = true;
        eval.decoded = chromosome;
        std::sort(eval.decoded.begin(), eval.decoded.end());
        return eval;
      };
      break;
    }

    case VariantSpec::Kind::steiner: {
      const int length = cfg.model2_length(g);
      problem.chromosome_length = length;
      problem.make_individual = [&g, length](Rng& rng) {
        EdgeSelection genes = random_spanning_tree(g, rng);
        std::vector<char> used(static_cast<std::size_t>(g.edge_count()) + 1, 0);
        for (int gene : genes) used[static_cast<std::size_t>(gene)] = 1;
        while (static_cast<int>(genes.size()) < length) {
          int gene =
              1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(g.edge_count())));
          if (!used[static_cast<std::size_t>(gene)]) {
            used[static_cast<std::size_t>(gene)] = 1;
            genes.push_back(gene);
          }
        }
        return genes;
      };
      problem.evaluate = [&g, spec = v.base, terminals = v.terminals, base_penalty, depth,
                          pairs, sense](const EdgeSelection& chromosome) {
        detail::FitnessEval eval;
        KruskalResult kruskal = kruskal_decode(g, chromosome);
        if (!kruskal.is_spanning_tree) {
          // Grade by terminals stranded outside the largest forest component.
          UnionFind uf(g.vertex_count());
          for (int label : kruskal.tree_labels) uf.unite(g.edge(label).u, g.edge(label).v);
          int root = 0;
          for (int vtx = 0; vtx < g.vertex_count(); ++vtx)
            if (uf.set_size(vtx) > uf.set_size(root)) root = vtx;
          int missing = 0;
          for (int t : terminals)
            if (!uf.same(t, root)) ++missing;
          eval.fitness = base_penalty * (1 + missing) + (kruskal.component_count - 1);
          return eval;
        }
        DecodeResult spanning = decode_tree(g, kruskal.tree_labels, 0, false);
        TreeView pruned = prune_to_terminals(g, *spanning.tree, terminals, depth, pairs);
        eval.raw = evaluate(pruned, spec);
        eval.fitness = detail::normalize(eval.raw, sense);
        eval.feasible = true;
        eval.decoded = pruned.edge_labels;
        std::sort(eval.decoded.begin(), eval.decoded.end());
        return eval;
      };
      break;
    }

    case VariantSpec::Kind::conflict_pairs:
    case VariantSpec::Kind::degree_bound: {
      const int length =
          cfg.model == 1 ? g.vertex_count() - 1 : cfg.model2_length(g);
      problem.chromosome_length = length;
      problem.make_individual = [&g, length, model = cfg.model](Rng& rng) {
        EdgeSelection genes = random_spanning_tree(g, rng);
        if (model == 1) return genes;
        std::vector<char> used(static_cast<std::size_t>(g.edge_count()) + 1, 0);
        for (int gene : genes) used[static_cast<std::size_t>(gene)] = 1;
        while (static_cast<int>(genes.size()) < length) {
          int gene =
              1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(g.edge_count())));
          if (!used[static_cast<std::size_t>(gene)]) {
            used[static_cast<std::size_t>(gene)] = 1;
            genes.push_back(gene);
          }
        }
        return genes;
      };
      problem.evaluate = [&g, variant = v, base_penalty, depth, pairs, sense,
                          model = cfg.model](const EdgeSelection& chromosome) {
        detail::FitnessEval eval;
        EdgeSelection tree_labels;
        if (model == 1) {
          DecodeResult decoded = decode_tree(g, chromosome, 0, false);
          if (!decoded.tree) {
            eval.fitness = base_penalty + (decoded.component_count - 1);
            return eval;
          }
          tree_labels = chromosome;
        } else {
          KruskalResult kruskal = kruskal_decode(g, chromosome);
          if (!kruskal.is_spanning_tree) {
            eval.fitness = base_penalty + (kruskal.component_count - 1);
            return eval;
          }
          tree_labels = kruskal.tree_labels;
        }
        DecodeResult decoded = decode_tree(g, tree_labels, depth, pairs);
        eval.raw = evaluate(*decoded.tree, variant.base);

        int violations = 0;
        if (variant.kind == VariantSpec::Kind::conflict_pairs) {
          std::vector<char> scratch(static_cast<std::size_t>(g.edge_count()) + 1, 0);
          violations = count_conflict_violations(variant, tree_labels, scratch);
        } else {
          for (int vtx : decoded.tree->vertices)
            if (decoded.tree->degree[static_cast<std::size_t>(vtx)] > variant.k) ++violations;
        }
        eval.fitness = detail::normalize(eval.raw, sense) + base_penalty * violations;
        eval.feasible = violations == 0;
        if (eval.feasible) {
          eval.decoded = tree_labels;
          std::sort(eval.decoded.begin(), eval.decoded.end());
        }
        return eval;
      };
      break;
    }
  }

  return detail::run_ga(problem, cfg);
}

bool variant_satisfied(const Graph& g, const VariantSpec& v, const EdgeSelection& tree_labels) {
  // Plain DFS tree check, independent of the decode path.
  std::vector<char> in_sel(static_cast<std::size_t>(g.edge_count()) + 1, 0);
  for (int label : tree_labels) {
    if (!g.has_label(label) || in_sel[static_cast<std::size_t>(label)]) return false;
    in_sel[static_cast<std::size_t>(label)] = 1;
  }
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::vector<char> touched(static_cast<std::size_t>(n), 0);
  for (int label : tree_labels) {
    const Edge& e = g.edge(label);
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    ++degree[static_cast<std::size_t>(e.u)];
    ++degree[static_cast<std::size_t>(e.v)];
    touched[static_cast<std::size_t>(e.u)] = 1;
    touched[static_cast<std::size_t>(e.v)] = 1;
  }
  int touched_count = 0;
  int start = -1;
  for (int vtx = 0; vtx < n; ++vtx)
    if (touched[static_cast<std::size_t>(vtx)]) {
      ++touched_count;
      if (start == -1) start = vtx;
    }
  if (tree_labels.empty())
    return v.kind == VariantSpec::Kind::k_subtree && v.k == 1;

  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> stack{start};
  seen[static_cast<std::size_t>(start)] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : adj[static_cast<std::size_t>(u)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  const bool is_tree = reached == touched_count &&
                       static_cast<int>(tree_labels.size()) == touched_count - 1;
  if (!is_tree) return false;

  switch (v.kind) {
    case VariantSpec::Kind::k_subtree:
      return touched_count == v.k;
    case VariantSpec::Kind::steiner:
      for (int t : v.terminals)
        if (!touched[static_cast<std::size_t>(t)]) return false;
      return true;
    case VariantSpec::Kind::conflict_pairs: {
      if (touched_count != n) return false;
      for (auto [a, b] : v.conflicts)
        if (in_sel[static_cast<std::size_t>(a)] && in_sel[static_cast<std::size_t>(b)])
          return false;
      return true;
    }
    case VariantSpec::Kind::degree_bound: {
      if (touched_count != n) return false;
      for (int vtx = 0; vtx < n; ++vtx)
        if (degree[static_cast<std::size_t>(vtx)] > v.k) return false;
      return true;
    }
  }
  return false;
}

}  // namespace spantree
