#include "spantree/peeling.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "spantree/rng.hpp"

namespace spantree {

namespace {

bool edges_connect_all(int n, const std::vector<Edge>& edges) {
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : adj[static_cast<std::size_t>(u)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        queue.push_back(w);
      }
  }
  return reached == n;
}

void remove_edges(std::vector<Edge>& working, const std::vector<std::pair<int, int>>& doomed) {
  auto key = [](int a, int b) { return a < b ? std::pair(a, b) : std::pair(b, a); };
  std::erase_if(working, [&](const Edge& e) {
    for (auto [u, v] : doomed)
      if (key(e.u, e.v) == key(u, v)) return true;
    return false;
  });
}

// Tree path u..v as a vertex sequence (BFS parent walk).
std::vector<int> tree_path(const TreeView& tree, int from, int to) {
  std::vector<int> parent(static_cast<std::size_t>(tree.host_vertex_count), -2);
  std::deque<int> queue{from};
  parent[static_cast<std::size_t>(from)] = -1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (int w : tree.adj[static_cast<std::size_t>(u)])
      if (parent[static_cast<std::size_t>(w)] == -2) {
        parent[static_cast<std::size_t>(w)] = u;
        queue.push_back(w);
      }
  }
  std::vector<int> path;
  for (int v = to; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// The two highest-degree tree vertices. Any vertex strictly above the
// second-highest degree is forced; remaining slots are drawn at random from
// the vertices tied at that degree.
struct TopPick {
  std::vector<std::pair<int, int>> candidates;  // all with degree >= second-highest
  int first = -1;
  int second = -1;
};

TopPick pick_top_two(const TreeView& tree, Rng& rng) {
  std::vector<std::pair<int, int>> by_degree;  // (vertex, degree)
  for (int v : tree.vertices)
    by_degree.emplace_back(v, tree.degree[static_cast<std::size_t>(v)]);
  std::sort(by_degree.begin(), by_degree.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });

  const int threshold = by_degree[1].second;
  TopPick pick;
  std::vector<int> pool;
  for (const auto& [v, d] : by_degree) {
    if (d < threshold) break;
    pick.candidates.emplace_back(v, d);
    if (d > threshold) {
      pick.first = v;
    } else {
      pool.push_back(v);
    }
  }
  int needed = pick.first == -1 ? 2 : 1;
  for (int i = 0; i < needed; ++i) {
    std::size_t j = static_cast<std::size_t>(rng.next_below(pool.size()));
    int chosen = pool[j];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(j));
    (pick.first == -1 ? pick.first : pick.second) = chosen;
  }
  return pick;
}

PeelingReport peel(const Graph& g, const ObjectiveSpec& spec, const GaConfig& cfg,
                   bool node_mode) {
  if (!g.is_connected())
    throw std::invalid_argument("graph is disconnected: nothing to peel");
  if (g.edge_count() == 0)
    throw std::invalid_argument("graph has no edges: nothing to peel");

  std::vector<Edge> working = g.edges();
  Rng tie_rng(cfg.seed);
  PeelingReport report;

  while (true) {
    Graph current(g.vertex_count(), working, g.vertex_names());
    GaConfig run_cfg = cfg;
    run_cfg.seed = cfg.seed + static_cast<std::uint64_t>(report.runs.size()) + 1;
    SolveResult solved = solve(current, spec, run_cfg);
    DecodeResult decoded = decode_tree(current, solved.best_selection, 0, false);
    const TreeView& tree = *decoded.tree;

    PeelRun run;
    std::vector<std::pair<int, int>> doomed;
    if (node_mode) {
      TopPick pick = pick_top_two(tree, tie_rng);
      run.top_nodes = pick.candidates;
      run.removed_path = tree_path(tree, pick.first, pick.second);
      for (std::size_t i = 0; i + 1 < run.removed_path.size(); ++i)
        doomed.emplace_back(run.removed_path[i], run.removed_path[i + 1]);
    } else {
      int best_sum = -1;
      for (const auto& [u, v] : tree.edge_ends) {
        int sum = tree.degree[static_cast<std::size_t>(u)] +
                  tree.degree[static_cast<std::size_t>(v)];
        if (sum > best_sum) {
          best_sum = sum;
          run.removed_edges.clear();
        }
        if (sum == best_sum) run.removed_edges.emplace_back(u, v);
      }
      doomed = run.removed_edges;
    }

    remove_edges(working, doomed);
    report.runs.push_back(std::move(run));
    if (!edges_connect_all(g.vertex_count(), working)) break;
  }

  report.strength_score = static_cast<int>(report.runs.size());
  return report;
}

}  // namespace

PeelingReport peel_nodes(const Graph& g, const ObjectiveSpec& spec, const GaConfig& cfg) {
  return peel(g, spec, cfg, true);
}

PeelingReport peel_edges(const Graph& g, const ObjectiveSpec& spec, const GaConfig& cfg) {
  return peel(g, spec, cfg, false);
}

}  // namespace spantree
