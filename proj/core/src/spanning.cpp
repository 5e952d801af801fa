#include "spantree/spanning.hpp"

#include <algorithm>
#include <numeric>

#include "spantree/union_find.hpp"

namespace spantree {

KruskalResult kruskal_decode(const Graph& g, const EdgeSelection& sel) {
  if (sel.empty()) throw std::invalid_argument("empty selection");
  validate_selection(g, sel);
  const int n = g.vertex_count();

  // Stable sort by weight keeps chromosome position as the tiebreak, which
  // makes gene order meaningful in the unit-weight setting.
  std::vector<int> order(sel.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.edge(sel[static_cast<std::size_t>(a)]).weight <
           g.edge(sel[static_cast<std::size_t>(b)]).weight;
  });

  KruskalResult result;
  UnionFind uf(n);
  int merges = 0;
  for (int idx : order) {
    int label = sel[static_cast<std::size_t>(idx)];
    const Edge& e = g.edge(label);
    if (uf.unite(e.u, e.v)) {
      result.tree_labels.push_back(label);
      ++merges;
      if (merges == n - 1) break;
    }
  }
  result.component_count = n - merges;
  result.is_spanning_tree = result.component_count == 1;
  return result;
}

EdgeSelection random_spanning_tree(const Graph& g, Rng& rng) {
  const int n = g.vertex_count();
  std::vector<int> labels(static_cast<std::size_t>(g.edge_count()));
  std::iota(labels.begin(), labels.end(), 1);
  rng.shuffle(labels);

  EdgeSelection tree;
  UnionFind uf(n);
  for (int label : labels) {
    const Edge& e = g.edge(label);
    if (uf.unite(e.u, e.v)) {
      tree.push_back(label);
      if (static_cast<int>(tree.size()) == n - 1) break;
    }
  }
  if (static_cast<int>(tree.size()) != n - 1)
    throw std::invalid_argument("graph is disconnected: no spanning tree exists");
  return tree;
}

BigInt spanning_tree_count(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 1) return 1;
  const int m = n - 1;  // principal minor order

  // Laplacian minor (drop last row/column), then Bareiss fraction-free
  // elimination; every division below is exact.
  std::vector<BigInt> a(static_cast<std::size_t>(m) * m, 0);
  auto at = [&](int r, int c) -> BigInt& { return a[static_cast<std::size_t>(r) * m + c]; };
  for (const Edge& e : g.edges()) {
    if (e.u < m) at(e.u, e.u) += 1;
    if (e.v < m) at(e.v, e.v) += 1;
    if (e.u < m && e.v < m) {
      at(e.u, e.v) -= 1;
      at(e.v, e.u) -= 1;
    }
  }

  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < m - 1; ++k) {
    if (at(k, k) == 0) {
      int pivot = -1;
      for (int r = k + 1; r < m; ++r)
        if (at(r, k) != 0) {
          pivot = r;
          break;
        }
      if (pivot == -1) return 0;
      for (int c = k; c < m; ++c) std::swap(at(k, c), at(pivot, c));
      sign = -sign;
    }
    for (int r = k + 1; r < m; ++r) {
      for (int c = k + 1; c < m; ++c)
        at(r, c) = (at(r, c) * at(k, k) - at(r, k) * at(k, c)) / prev;
      at(r, k) = 0;
    }
    prev = at(k, k);
  }
  BigInt det = at(m - 1, m - 1) * sign;
  return det < 0 ? BigInt(-det) : det;
}

namespace {

// Branch on each edge in label order: include it (merging endpoints) or
// exclude it. The exclude branch is pruned when the still-available edges can
// no longer connect the chosen forest, so every leaf reached is a distinct
// spanning tree.
struct TreeEnumerator {
  const Graph& g;
  const std::function<void(const EdgeSelection&)>& visit;
  EdgeSelection chosen;

  bool can_still_connect(const UnionFind& uf_now, int next_idx) {
    UnionFind uf = uf_now;
    int merges = 0;
    const int needed = g.vertex_count() - 1 - static_cast<int>(chosen.size());
    for (int i = next_idx; i < g.edge_count(); ++i) {
      const Edge& e = g.edges()[static_cast<std::size_t>(i)];
      if (uf.unite(e.u, e.v)) {
        if (++merges == needed) return true;
      }
    }
    return needed == 0;
  }

  void recurse(int idx, UnionFind& uf) {
    if (static_cast<int>(chosen.size()) == g.vertex_count() - 1) {
      visit(chosen);
      return;
    }
    if (idx == g.edge_count()) return;

    const Edge& e = g.edges()[static_cast<std::size_t>(idx)];
    UnionFind with = uf;
    if (with.unite(e.u, e.v)) {
      chosen.push_back(e.label);
      recurse(idx + 1, with);
      chosen.pop_back();
    }
    if (can_still_connect(uf, idx + 1)) recurse(idx + 1, uf);
  }
};

}  // namespace

void for_each_spanning_tree(const Graph& g,
                            const std::function<void(const EdgeSelection&)>& visit) {
  const int n = g.vertex_count();
  if (n == 1) {
    visit({});
    return;
  }
  TreeEnumerator enumerator{g, visit, {}};
  UnionFind uf(n);
  if (enumerator.can_still_connect(uf, 0)) enumerator.recurse(0, uf);
}

std::vector<EdgeSelection> enumerate_spanning_trees(const Graph& g, std::uint64_t cap) {
  BigInt count = spanning_tree_count(g);
  if (count > cap) throw EnumerationCapExceeded(count, cap);
  std::vector<EdgeSelection> trees;
  trees.reserve(static_cast<std::size_t>(count));
  for_each_spanning_tree(g, [&](const EdgeSelection& sel) { trees.push_back(sel); });
  return trees;
}

}  // namespace spantree
