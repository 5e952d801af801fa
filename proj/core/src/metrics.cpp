#include "spantree/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace spantree {

std::string to_string(Sense s) {
  return s == Sense::minimize ? "min" : "max";
}

Sense parse_sense(std::string_view text) {
  if (text == "min" || text == "minimize") return Sense::minimize;
  if (text == "max" || text == "maximize") return Sense::maximize;
  throw std::invalid_argument("sense must be min or max, got '" + std::string(text) + "'");
}

ObjectiveSpec ObjectiveSpec::c_vec(std::vector<double> j, Sense s) {
  ObjectiveSpec spec;
  spec.kind = Kind::c_vector;
  spec.jvec = std::move(j);
  spec.sense = s;
  return spec;
}

ObjectiveSpec ObjectiveSpec::spow(double p, Sense s) {
  ObjectiveSpec spec;
  spec.kind = Kind::power_sum;
  spec.p = p;
  spec.sense = s;
  return spec;
}

ObjectiveSpec ObjectiveSpec::wiener_index(Sense s) {
  ObjectiveSpec spec;
  spec.kind = Kind::wiener;
  spec.sense = s;
  return spec;
}

ObjectiveSpec ObjectiveSpec::subtrees(Sense s) {
  ObjectiveSpec spec;
  spec.kind = Kind::subtree_count;
  spec.sense = s;
  return spec;
}

namespace {

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> values;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    double v = std::stod(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad number '" + item + "'");
    values.push_back(v);
  }
  return values;
}

}  // namespace

ObjectiveSpec ObjectiveSpec::parse(std::string_view text, Sense sense) {
  if (text == "wiener") return wiener_index(sense);
  if (text == "subtrees") return subtrees(sense);
  auto colon = text.find(':');
  std::string_view head = text.substr(0, colon);
  std::string_view args = colon == std::string_view::npos ? "" : text.substr(colon + 1);
  if (head == "cvec") {
    auto j = parse_number_list(args);
    if (j.empty()) throw std::invalid_argument("cvec needs at least one exponent");
    for (double e : j)
      if (e < 0) throw std::invalid_argument("cvec exponents must be nonnegative");
    return c_vec(std::move(j), sense);
  }
  if (head == "spow") {
    auto v = parse_number_list(args);
    if (v.size() != 1 || v[0] <= 0)
      throw std::invalid_argument("spow needs one positive exponent");
    return spow(v[0], sense);
  }
  throw std::invalid_argument("unknown objective '" + std::string(text) +
                              "' (expected cvec:..., spow:..., wiener, subtrees)");
}

std::string ObjectiveSpec::to_string() const {
  auto fmt = [](double x) {
    std::ostringstream out;
    out << x;
    return out.str();
  };
  switch (kind) {
    case Kind::wiener:
      return "wiener";
    case Kind::subtree_count:
      return "subtrees";
    case Kind::power_sum:
      return "spow:" + fmt(p);
    case Kind::c_vector: {
      std::string out = "cvec:";
      for (std::size_t i = 0; i < jvec.size(); ++i)
        out += (i ? "," : "") + fmt(jvec[i]);
      return out;
    }
  }
  return {};
}

int ObjectiveSpec::required_depth(int order) const {
  switch (kind) {
    case Kind::c_vector:
      return static_cast<int>(jvec.size());
    case Kind::wiener:
      return std::max(0, order - 1);
    default:
      return 0;
  }
}

int ObjectiveSpec::required_pair_depth() const {
  return kind == Kind::c_vector ? static_cast<int>(jvec.size()) : 0;
}

double ObjectiveSpec::largest_exponent() const {
  switch (kind) {
    case Kind::c_vector:
      return *std::max_element(jvec.begin(), jvec.end());
    case Kind::power_sum:
      return p;
    default:
      return 0.0;
  }
}

void ObjectiveSpec::validate(int vertex_count) const {
  if (kind == Kind::c_vector) {
    if (jvec.empty() || static_cast<int>(jvec.size()) > std::max(1, vertex_count - 1))
      throw std::invalid_argument("cvec length must be in [1, N-1]");
  }
  if (kind == Kind::power_sum && p <= 0)
    throw std::invalid_argument("spow exponent must be positive");
}

namespace {

bool is_small_integer(double x) {
  return x == std::floor(x) && std::abs(x) <= 64;
}

// Exact power for small integral exponents; degrees and exponents in this
// domain stay well inside double's integer range.
double deg_pow(int deg, double j) {
  if (is_small_integer(j)) {
    double result = 1.0;
    double base = deg;
    for (int k = 0; k < static_cast<int>(j); ++k) result *= base;
    return result;
  }
  return std::pow(static_cast<double>(deg), j);
}

}  // namespace

double c_ij(const TreeView& t, int i, double j) {
  if (i < 1) throw std::invalid_argument("distance must be >= 1");
  if (i > t.depth) {
    // Distances beyond order-1 cannot occur in a tree; the truncated data
    // still answers them exactly.
    if (i > t.order - 1) return 0.0;
    throw std::invalid_argument("distance " + std::to_string(i) +
                                " beyond populated depth " + std::to_string(t.depth));
  }
  if (j == 0.0) return 2.0 * static_cast<double>(t.pairs_at_distance(i));
  if (!t.pairs_stored)
    throw std::invalid_argument("tree decoded without pair lists");
  double sum = 0.0;
  for (const auto& [u, v] : t.pairs_at[static_cast<std::size_t>(i - 1)])
    sum += deg_pow(t.degree[static_cast<std::size_t>(u)], j) +
           deg_pow(t.degree[static_cast<std::size_t>(v)], j);
  return sum;
}

double c_vector(const TreeView& t, std::span<const double> jvec) {
  double sum = 0.0;
  for (std::size_t i = 0; i < jvec.size(); ++i)
    sum += c_ij(t, static_cast<int>(i) + 1, jvec[i]);
  return sum;
}

double power_sum(const TreeView& t, double p) {
  double sum = 0.0;
  for (int v : t.vertices) sum += deg_pow(t.degree[static_cast<std::size_t>(v)], p);
  return sum;
}

double wiener(const TreeView& t) {
  if (t.depth < t.order - 1)
    throw std::invalid_argument("wiener needs distances to full depth");
  double sum = 0.0;
  for (int i = 1; i <= t.depth; ++i)
    sum += static_cast<double>(i) * static_cast<double>(t.pairs_at_distance(i));
  return sum;
}

BigInt subtree_count(const TreeView& t) {
  if (t.order == 0) return 0;
  const int root = t.vertices.front();

  // f(v) = number of subtrees containing v and lying in v's rooted subtree;
  // every subtree is counted once at its topmost vertex.
  std::vector<BigInt> f(static_cast<std::size_t>(t.host_vertex_count), 0);
  std::vector<std::pair<int, int>> stack{{root, -1}};
  std::vector<std::pair<int, int>> order;
  while (!stack.empty()) {
    auto [v, parent] = stack.back();
    stack.pop_back();
    order.emplace_back(v, parent);
    for (int w : t.adj[static_cast<std::size_t>(v)])
      if (w != parent) stack.emplace_back(w, v);
  }
  BigInt total = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto [v, parent] = *it;
    BigInt prod = 1;
    for (int w : t.adj[static_cast<std::size_t>(v)])
      if (w != parent) prod *= 1 + f[static_cast<std::size_t>(w)];
    f[static_cast<std::size_t>(v)] = prod;
    total += prod;
  }
  return total;
}

double evaluate(const TreeView& t, const ObjectiveSpec& spec) {
  switch (spec.kind) {
    case ObjectiveSpec::Kind::c_vector:
      return c_vector(t, spec.jvec);
    case ObjectiveSpec::Kind::power_sum:
      return power_sum(t, spec.p);
    case ObjectiveSpec::Kind::wiener:
      return wiener(t);
    case ObjectiveSpec::Kind::subtree_count:
      return static_cast<double>(subtree_count(t));
  }
  throw std::logic_error("unreachable objective kind");
}

}  // namespace spantree
