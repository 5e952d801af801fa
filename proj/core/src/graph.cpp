#include "spantree/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "spantree/union_find.hpp"

namespace spantree {

Graph::Graph(int vertex_count, std::vector<Edge> edges,
             std::vector<std::string> names)
    : n_(vertex_count), edges_(std::move(edges)), names_(std::move(names)) {
  if (n_ <= 0) throw std::invalid_argument("graph needs at least one vertex");
  if (names_.empty()) {
    names_.reserve(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) names_.push_back(std::to_string(v));
  }
  if (static_cast<int>(names_.size()) != n_)
    throw std::invalid_argument("vertex name table size mismatch");

  incidence_.assign(static_cast<std::size_t>(n_), {});
  label_matrix_.assign(static_cast<std::size_t>(n_) * n_, 0);

  int label = 0;
  for (Edge& e : edges_) {
    ++label;
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loop not allowed");
    if (e.weight < 0) throw std::invalid_argument("negative edge weight");
    if (label_at(e.u, e.v) != 0) throw std::invalid_argument("duplicate edge");
    e.label = label;
    label_matrix_[static_cast<std::size_t>(e.u) * n_ + e.v] = label;
    label_matrix_[static_cast<std::size_t>(e.v) * n_ + e.u] = label;
    incidence_[static_cast<std::size_t>(e.u)].push_back(label);
    incidence_[static_cast<std::size_t>(e.v)].push_back(label);
  }
}

std::optional<int> Graph::vertex_by_name(const std::string& name) const {
  for (int v = 0; v < n_; ++v)
    if (names_[static_cast<std::size_t>(v)] == name) return v;
  return std::nullopt;
}

bool Graph::is_connected() const {
  if (n_ == 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int visited = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int label : incidence_[static_cast<std::size_t>(u)]) {
      const Edge& e = edge(label);
      int w = (e.u == u) ? e.v : e.u;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++visited;
        queue.push_back(w);
      }
    }
  }
  return visited == n_;
}

void validate_selection(const Graph& g, const EdgeSelection& sel) {
  std::vector<char> used(static_cast<std::size_t>(g.edge_count()) + 1, 0);
  for (int label : sel) {
    if (!g.has_label(label))
      throw std::invalid_argument("edge label " + std::to_string(label) + " out of range");
    if (used[static_cast<std::size_t>(label)])
      throw std::invalid_argument("duplicate edge label " + std::to_string(label));
    used[static_cast<std::size_t>(label)] = 1;
  }
}

namespace {

// Truncated BFS from every tree vertex; records each unordered pair once.
void populate_distances(TreeView& t, int i_max, bool store_pairs) {
  int depth = std::min(i_max, std::max(0, t.order - 1));
  t.depth = depth;
  t.pairs_stored = store_pairs;
  t.pair_count.assign(static_cast<std::size_t>(depth), 0);
  t.pairs_at.clear();
  if (store_pairs) t.pairs_at.resize(static_cast<std::size_t>(depth));
  if (depth == 0) return;

  std::vector<int> dist(static_cast<std::size_t>(t.host_vertex_count), -1);
  std::vector<int> frontier, next, touched;
  for (int src : t.vertices) {
    touched.clear();
    frontier.assign(1, src);
    dist[static_cast<std::size_t>(src)] = 0;
    touched.push_back(src);
    for (int d = 1; d <= depth && !frontier.empty(); ++d) {
      next.clear();
      for (int u : frontier) {
        for (int w : t.adj[static_cast<std::size_t>(u)]) {
          if (dist[static_cast<std::size_t>(w)] != -1) continue;
          dist[static_cast<std::size_t>(w)] = d;
          touched.push_back(w);
          next.push_back(w);
          if (src < w) {
            ++t.pair_count[static_cast<std::size_t>(d - 1)];
            if (store_pairs)
              t.pairs_at[static_cast<std::size_t>(d - 1)].emplace_back(src, w);
          }
        }
      }
      frontier.swap(next);
    }
    for (int v : touched) dist[static_cast<std::size_t>(v)] = -1;
  }
}

}  // namespace

TreeView build_tree_view(int host_vertex_count,
                         const std::vector<std::array<int, 2>>& ends,
                         const std::vector<int>& labels, int i_max,
                         bool store_pairs) {
  TreeView t;
  t.host_vertex_count = host_vertex_count;
  t.edge_ends = ends;
  t.edge_labels = labels;
  t.degree.assign(static_cast<std::size_t>(host_vertex_count), 0);
  t.adj.assign(static_cast<std::size_t>(host_vertex_count), {});
  std::vector<char> present(static_cast<std::size_t>(host_vertex_count), 0);
  for (const auto& [u, v] : ends) {
    ++t.degree[static_cast<std::size_t>(u)];
    ++t.degree[static_cast<std::size_t>(v)];
    t.adj[static_cast<std::size_t>(u)].push_back(v);
    t.adj[static_cast<std::size_t>(v)].push_back(u);
    present[static_cast<std::size_t>(u)] = 1;
    present[static_cast<std::size_t>(v)] = 1;
  }
  if (ends.empty() && host_vertex_count == 1) present[0] = 1;
  for (int v = 0; v < host_vertex_count; ++v)
    if (present[static_cast<std::size_t>(v)]) t.vertices.push_back(v);
  t.order = static_cast<int>(t.vertices.size());
  populate_distances(t, i_max, store_pairs);
  return t;
}

DecodeResult decode_tree(const Graph& g, const EdgeSelection& sel, int i_max,
                         bool store_pairs) {
  const int n = g.vertex_count();
  if (static_cast<int>(sel.size()) != n - 1)
    throw std::invalid_argument("selection size " + std::to_string(sel.size()) +
                                " != N-1 = " + std::to_string(n - 1));
  validate_selection(g, sel);

  UnionFind uf(n);
  int merges = 0;
  for (int label : sel)
    if (uf.unite(g.edge(label).u, g.edge(label).v)) ++merges;

  DecodeResult result;
  result.component_count = n - merges;
  if (result.component_count != 1) return result;

  std::vector<std::array<int, 2>> ends;
  ends.reserve(sel.size());
  for (int label : sel) ends.push_back({g.edge(label).u, g.edge(label).v});
  result.tree = build_tree_view(n, ends, sel, i_max, store_pairs);
  return result;
}

SubtreeDecodeResult decode_subtree(const Graph& g, const EdgeSelection& sel,
                                   int i_max, bool store_pairs) {
  validate_selection(g, sel);
  const int n = g.vertex_count();

  std::vector<char> touched(static_cast<std::size_t>(n), 0);
  int touched_count = 0;
  for (int label : sel) {
    for (int v : {g.edge(label).u, g.edge(label).v}) {
      if (!touched[static_cast<std::size_t>(v)]) {
        touched[static_cast<std::size_t>(v)] = 1;
        ++touched_count;
      }
    }
  }

  UnionFind uf(n);
  int merges = 0;
  for (int label : sel)
    if (uf.unite(g.edge(label).u, g.edge(label).v)) ++merges;

  SubtreeDecodeResult result;
  result.touched = touched_count;
  result.component_count = touched_count - merges;
  result.has_cycle = merges < static_cast<int>(sel.size());
  if (result.has_cycle || result.component_count != 1) return result;

  std::vector<std::array<int, 2>> ends;
  ends.reserve(sel.size());
  for (int label : sel) ends.push_back({g.edge(label).u, g.edge(label).v});
  result.tree = build_tree_view(n, ends, sel, i_max, store_pairs);
  return result;
}

bool is_tree_degree_sequence(const DegreeSequence& seq) {
  if (seq.empty()) return false;
  long long sum = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (seq[i] < 1) return false;
    if (i + 1 < seq.size() && seq[i] < seq[i + 1]) return false;
    sum += seq[i];
  }
  return sum == 2 * (static_cast<long long>(seq.size()) - 1);
}

TreeView greedy_tree(const DegreeSequence& seq) {
  if (!is_tree_degree_sequence(seq))
    throw std::invalid_argument("degree sequence is not realizable by a tree");
  const int n = static_cast<int>(seq.size());

  DegreeSequence pool(seq.begin(), seq.end());
  std::sort(pool.begin(), pool.end(), std::greater<int>());

  std::vector<std::array<int, 2>> ends;
  std::vector<int> labels;
  if (n > 1) {
    // target[v]: degree assigned to vertex v; vertices created in BFS order.
    std::vector<int> target(static_cast<std::size_t>(n), 0);
    std::size_t next_pool = 0;
    target[0] = pool[next_pool++];
    int created = 1;

    // Vertices needing children, ordered by (assigned degree desc, creation
    // order asc): "always start with the neighbors of the labeled vertex with
    // largest degree".
    std::vector<int> pending{0};
    while (!pending.empty()) {
      auto it = std::max_element(
          pending.begin(), pending.end(), [&](int a, int b) {
            auto key = [&](int v) { return std::pair(target[static_cast<std::size_t>(v)], -v); };
            return key(a) < key(b);
          });
      int parent = *it;
      pending.erase(it);
      int children = target[static_cast<std::size_t>(parent)] - (parent == 0 ? 0 : 1);
      for (int c = 0; c < children; ++c) {
        int child = created++;
        target[static_cast<std::size_t>(child)] = pool[next_pool++];
        ends.push_back({parent, child});
        labels.push_back(static_cast<int>(ends.size()));
        if (target[static_cast<std::size_t>(child)] > 1) pending.push_back(child);
      }
    }
  }
  return build_tree_view(n, ends, labels, std::max(1, n - 1), true);
}

bool majorizes(const DegreeSequence& a, const DegreeSequence& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("majorizes: length mismatch");
  long long pa = 0, pb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    pa += a[i];
    pb += b[i];
    if (pa < pb) return false;
  }
  return pa == pb;
}

}  // namespace spantree
