#include "spantree/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "spantree/union_find.hpp"

namespace spantree {

namespace {

Graph finish_load(int n, std::vector<Edge> edges, std::vector<std::string> names) {
  if (n == 0 || edges.empty()) throw ParseError(0, "empty graph");
  Graph g(n, std::move(edges), std::move(names));
  if (!g.is_connected())
    throw std::invalid_argument("input graph is disconnected: no spanning tree exists");
  return g;
}

Graph load_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::vector<std::string> names;
  std::unordered_map<std::string, int> ids;
  auto intern = [&](const std::string& name) {
    auto [it, inserted] = ids.try_emplace(name, static_cast<int>(names.size()));
    if (inserted) names.push_back(name);
    return it->second;
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string u, v;
    if (!(fields >> u)) continue;  // blank
    if (!(fields >> v)) throw ParseError(line_no, "expected 'u v [w]'");
    double w = 1.0;
    std::string rest;
    if (fields >> rest) {
      try {
        std::size_t pos = 0;
        w = std::stod(rest, &pos);
        if (pos != rest.size()) throw std::invalid_argument(rest);
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad weight '" + rest + "'");
      }
      std::string extra;
      if (fields >> extra) throw ParseError(line_no, "trailing field '" + extra + "'");
    }
    if (u == v) throw ParseError(line_no, "self-loop '" + u + " " + v + "'");
    if (w < 0) throw ParseError(line_no, "negative weight");
    Edge e;
    e.u = intern(u);
    e.v = intern(v);
    e.weight = w;
    for (const Edge& seen : edges)
      if ((seen.u == e.u && seen.v == e.v) || (seen.u == e.v && seen.v == e.u))
        throw ParseError(line_no, "duplicate edge '" + u + " " + v + "'");
    edges.push_back(e);
  }
  const int n = static_cast<int>(names.size());
  return finish_load(n, std::move(edges), std::move(names));
}

Graph load_adjacency_csv(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r,") == std::string::npos) continue;
    std::vector<double> row;
    std::string cell;
    std::istringstream cells(line);
    while (std::getline(cells, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad matrix entry '" + cell + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw ParseError(0, "empty graph");
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
      throw ParseError(i + 1, "matrix is not square");
  for (int i = 0; i < n; ++i) {
    if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] != 0)
      throw ParseError(i + 1, "self-loop on the diagonal");
    for (int j = i + 1; j < n; ++j)
      if (rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])
        throw ParseError(i + 1, "matrix is not symmetric");
  }

  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      double w = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (w != 0) {
        Edge e;
        e.u = i;
        e.v = j;
        e.weight = w;
        edges.push_back(e);
      }
    }
  return finish_load(n, std::move(edges), {});
}

}  // namespace

Graph load_graph(std::istream& in, GraphFormat format) {
  return format == GraphFormat::edge_list ? load_edge_list(in) : load_adjacency_csv(in);
}

Graph load_graph_file(const std::string& path, std::optional<GraphFormat> format) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  GraphFormat fmt = format.value_or(path.ends_with(".csv") ? GraphFormat::adjacency_csv
                                                           : GraphFormat::edge_list);
  return load_graph(in, fmt);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  char buf[32];
  for (const Edge& e : g.edges()) {
    out << g.vertex_name(e.u) << ' ' << g.vertex_name(e.v);
    if (e.weight != 1.0) {
      auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), e.weight);
      out << ' ' << std::string_view(buf, static_cast<std::size_t>(end - buf));
    }
    out << '\n';
  }
}

namespace {

std::string dot_quote(const std::string& name) {
  std::string quoted = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string to_dot(const Graph& g) {
  return to_dot(g, {}, true);
}

std::string to_dot(const Graph& g, const std::vector<int>& tree_labels, bool include_nontree) {
  std::vector<char> in_tree(static_cast<std::size_t>(g.edge_count()) + 1, 0);
  for (int label : tree_labels) in_tree[static_cast<std::size_t>(label)] = 1;
  const bool highlight = !tree_labels.empty();

  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "  " << dot_quote(g.vertex_name(v)) << ";\n";
  for (const Edge& e : g.edges()) {
    const bool tree_edge = in_tree[static_cast<std::size_t>(e.label)];
    if (highlight && !tree_edge && !include_nontree) continue;
    out << "  " << dot_quote(g.vertex_name(e.u)) << " -- " << dot_quote(g.vertex_name(e.v))
        << " [label=\"" << e.label << "\"";
    if (highlight) out << (tree_edge ? ", penwidth=2" : ", color=gray");
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string tree_to_dot(const TreeView& t) {
  std::ostringstream out;
  out << "graph T {\n  node [shape=circle];\n";
  for (int v : t.vertices) out << "  \"" << v + 1 << "\";\n";
  for (const auto& [u, v] : t.edge_ends)
    out << "  \"" << u + 1 << "\" -- \"" << v + 1 << "\";\n";
  out << "}\n";
  return out.str();
}

GeneratedGraph gen_random_graph(int n, int m, Rng& rng, bool require_connected,
                                bool planted_star, bool planted_path) {
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  if (m > max_edges) throw std::invalid_argument("m exceeds the number of vertex pairs");
  if (m < n - 1) throw std::invalid_argument("m < n-1 cannot be connected");

  std::vector<std::vector<char>> present(static_cast<std::size_t>(n),
                                         std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<Edge> edges;
  auto add = [&](int u, int v) {
    if (present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) return false;
    present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
    present[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    Edge e;
    e.u = u;
    e.v = v;
    edges.push_back(e);
    return true;
  };

  GeneratedGraph result{Graph(2, {{0, 1, 1.0, 0}}), std::nullopt, std::nullopt};

  if (planted_star) {
    int hub = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    result.hub = hub;
    for (int v = 0; v < n; ++v)
      if (v != hub) add(hub, v);
  }
  if (planted_path) {
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    result.path = order;
    for (int i = 0; i + 1 < n; ++i)
      add(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i + 1)]);
  }
  if (static_cast<int>(edges.size()) > m)
    throw std::invalid_argument("planted structures need more than m edges");

  if (require_connected && !planted_star && !planted_path) {
    // Random spanning tree skeleton: attach each shuffled vertex to a random
    // earlier one.
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    for (int i = 1; i < n; ++i) {
      int j = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i)));
      add(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]);
    }
    if (static_cast<int>(edges.size()) > m)
      throw std::invalid_argument("m too small for a connected graph");
  }

  std::vector<std::pair<int, int>> free_pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)])
        free_pairs.emplace_back(u, v);
  rng.shuffle(free_pairs);
  for (std::size_t i = 0; static_cast<int>(edges.size()) < m; ++i)
    add(free_pairs[i].first, free_pairs[i].second);

  rng.shuffle(edges);
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) names.push_back(std::to_string(v + 1));
  result.graph = Graph(n, std::move(edges), std::move(names));
  return result;
}

}  // namespace spantree
