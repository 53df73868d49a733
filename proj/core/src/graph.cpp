#include "fcd/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fcd {

std::int64_t ColorVector::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::int64_t{0});
}

ColorVector& ColorVector::operator+=(const ColorVector& other) {
  if (other.size() != size()) throw std::invalid_argument("color vector length mismatch");
  for (std::size_t c = 0; c < size(); ++c) counts_[c] += other.counts_[c];
  return *this;
}

ColorVector& ColorVector::operator-=(const ColorVector& other) {
  if (other.size() != size()) throw std::invalid_argument("color vector length mismatch");
  for (std::size_t c = 0; c < size(); ++c) counts_[c] -= other.counts_[c];
  return *this;
}

std::int64_t mov(std::span<const std::int64_t> counts) {
  if (counts.empty()) throw std::invalid_argument("mov of an empty vector");
  if (counts.size() == 1) return counts[0];
  std::int64_t first = counts[0];
  std::int64_t second = counts[1];
  if (second > first) std::swap(first, second);
  for (std::size_t i = 2; i < counts.size(); ++i) {
    if (counts[i] > first) {
      second = first;
      first = counts[i];
    } else if (counts[i] > second) {
      second = counts[i];
    }
  }
  return first - second;
}

std::size_t top_color(std::span<const std::int64_t> counts) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (counts[i] > counts[best]) best = i;
  return best;
}

ColoredGraph::ColoredGraph(int num_colors, std::vector<Color> colors,
                           const std::vector<Edge>& edges)
    : num_colors_(num_colors), colors_(std::move(colors)) {
  if (num_colors_ < 1) throw std::invalid_argument("num_colors must be at least 1");
  const int count = static_cast<int>(colors_.size());
  for (int v = 0; v < count; ++v) {
    if (colors_[v] < 0 || colors_[v] >= num_colors_)
      throw std::invalid_argument("vertex " + std::to_string(v) + " has color " +
                                  std::to_string(colors_[v]) + " outside [0, " +
                                  std::to_string(num_colors_) + ")");
  }
  adjacency_.assign(count, {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= count || v >= count)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (int v = 0; v < count; ++v) {
    auto& adj = adjacency_[v];
    std::sort(adj.begin(), adj.end());
    if (std::adjacent_find(adj.begin(), adj.end()) != adj.end())
      throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
  }
  num_edges_ = static_cast<int>(edges.size());
}

bool ColoredGraph::has_edge(Vertex u, Vertex v) const {
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> ColoredGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (int u = 0; u < n(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Instance::Instance(ColoredGraph g, int k_, std::int64_t ell_)
    : graph(std::move(g)), k(k_), ell(ell_) {
  if (k < 1 || k > graph.n())
    throw std::invalid_argument("k must satisfy 1 <= k <= n (k=" + std::to_string(k) +
                                ", n=" + std::to_string(graph.n()) + ")");
  if (ell < 0) throw std::invalid_argument("ell must be non-negative");
}

Districting::Districting(std::vector<int> assignment, int k)
    : assignment_(std::move(assignment)), k_(k) {
  if (k_ < 1) throw std::invalid_argument("districting needs k >= 1");
  for (int d : assignment_)
    if (d < 0 || d >= k_) throw std::invalid_argument("district index out of range");
}

Districting Districting::from_sets(const std::vector<std::vector<Vertex>>& sets, int n) {
  std::vector<int> assignment(n, -1);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (Vertex v : sets[i]) {
      if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range in district");
      if (assignment[v] != -1)
        throw std::invalid_argument("vertex " + std::to_string(v) + " listed twice");
      assignment[v] = static_cast<int>(i);
    }
  }
  for (int v = 0; v < n; ++v)
    if (assignment[v] == -1)
      throw std::invalid_argument("vertex " + std::to_string(v) + " not assigned");
  return Districting(std::move(assignment), static_cast<int>(sets.size()));
}

std::vector<std::vector<Vertex>> Districting::districts() const {
  std::vector<std::vector<Vertex>> out(k_);
  for (int v = 0; v < n(); ++v) out[assignment_[v]].push_back(v);
  return out;
}

Districting Districting::canonical() const {
  std::vector<int> relabel(k_, -1);
  int next = 0;
  for (int d : assignment_)
    if (relabel[d] == -1) relabel[d] = next++;
  for (int& r : relabel)
    if (r == -1) r = next++;
  std::vector<int> out(assignment_.size());
  for (std::size_t v = 0; v < assignment_.size(); ++v) out[v] = relabel[assignment_[v]];
  return Districting(std::move(out), k_);
}

ColorVector color_vector(const ColoredGraph& graph, std::span<const Vertex> subset) {
  ColorVector cv(graph.num_colors());
  for (Vertex v : subset) {
    if (v < 0 || v >= graph.n())
      throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    ++cv[graph.color(v)];
  }
  return cv;
}

std::vector<std::vector<Vertex>> connected_components(const ColoredGraph& graph,
                                                      std::span<const Vertex> subset) {
  std::vector<char> member(graph.n(), 0);
  for (Vertex v : subset) member[v] = 1;
  std::vector<Vertex> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());

  std::vector<char> seen(graph.n(), 0);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s : sorted) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : graph.neighbors(u)) {
        if (member[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<Vertex>> connected_components(const ColoredGraph& graph) {
  std::vector<Vertex> all(graph.n());
  std::iota(all.begin(), all.end(), 0);
  return connected_components(graph, all);
}

bool is_connected_subset(const ColoredGraph& graph, std::span<const Vertex> subset) {
  if (subset.empty()) return false;
  return connected_components(graph, subset).size() == 1;
}

ColoredGraph induced_subgraph(const ColoredGraph& graph, std::span<const Vertex> vertices) {
  std::vector<int> index(graph.n(), -1);
  std::vector<Color> colors;
  colors.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    index[vertices[i]] = static_cast<int>(i);
    colors.push_back(graph.color(vertices[i]));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : graph.neighbors(vertices[i]))
      if (index[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), index[w]);
  return ColoredGraph(graph.num_colors(), std::move(colors), edges);
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kEmpty: return "empty";
    case ViolationKind::kDisconnected: return "disconnected";
    case ViolationKind::kUnfair: return "unfair";
  }
  return "unknown";
}

std::string Verdict::describe() const {
  if (!violation) return "valid";
  std::string s = "district " + std::to_string(violation->district) + ": " +
                  to_string(violation->kind);
  if (violation->kind == ViolationKind::kUnfair) s += " (mov=" + std::to_string(violation->mov) + ")";
  return s;
}

Verdict verify_districting(const Instance& instance, const Districting& d) {
  const auto& g = instance.graph;
  if (d.k() != instance.k)
    throw std::invalid_argument("districting has k=" + std::to_string(d.k()) +
                                ", instance expects " + std::to_string(instance.k));
  if (d.n() != g.n())
    throw std::invalid_argument("districting covers " + std::to_string(d.n()) +
                                " vertices, graph has " + std::to_string(g.n()));
  const auto sets = d.districts();
  for (int i = 0; i < d.k(); ++i) {
    const auto& set = sets[i];
    if (set.empty()) return {Violation{i, ViolationKind::kEmpty, 0}};
    if (!is_connected_subset(g, set)) return {Violation{i, ViolationKind::kDisconnected, 0}};
    const auto m = mov(color_vector(g, set));
    if (m > instance.ell) return {Violation{i, ViolationKind::kUnfair, m}};
  }
  return {};
}

}  // namespace fcd
