#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fcd {

using Vertex = int;
using Color = int;
using Edge = std::pair<Vertex, Vertex>;

/// Per-color vertex counts of a district.  The length always equals the
/// number of colors of the owning graph, zero entries included.
class ColorVector {
 public:
  ColorVector() = default;
  explicit ColorVector(std::size_t num_colors) : counts_(num_colors, 0) {}
  explicit ColorVector(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {}

  std::size_t size() const { return counts_.size(); }
  std::int64_t operator[](std::size_t c) const { return counts_[c]; }
  std::int64_t& operator[](std::size_t c) { return counts_[c]; }
  std::span<const std::int64_t> counts() const { return counts_; }

  std::int64_t total() const;

  ColorVector& operator+=(const ColorVector& other);
  ColorVector& operator-=(const ColorVector& other);
  friend ColorVector operator+(ColorVector a, const ColorVector& b) { return a += b; }
  friend ColorVector operator-(ColorVector a, const ColorVector& b) { return a -= b; }
  friend bool operator==(const ColorVector&, const ColorVector&) = default;

 private:
  std::vector<std::int64_t> counts_;
};

/// Margin of victory: largest entry minus second largest (the maximum is
/// removed once, so tied maxima give 0).  A length-1 vector yields its only
/// entry.  Throws std::invalid_argument on an empty vector.
std::int64_t mov(std::span<const std::int64_t> counts);
inline std::int64_t mov(const ColorVector& v) { return mov(v.counts()); }

/// Index of the largest entry, lowest index on ties.
std::size_t top_color(std::span<const std::int64_t> counts);

/// Undirected simple graph with one color per vertex.  Immutable once built.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  /// Validates: colors.size() is the vertex count, every color < num_colors,
  /// no self-loops, no duplicate edges, endpoints in range.
  ColoredGraph(int num_colors, std::vector<Color> colors, const std::vector<Edge>& edges);

  int n() const { return static_cast<int>(colors_.size()); }
  int num_colors() const { return num_colors_; }
  int num_edges() const { return num_edges_; }
  Color color(Vertex v) const { return colors_[v]; }
  std::span<const Color> colors() const { return colors_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  int num_colors_ = 1;
  int num_edges_ = 0;
  std::vector<Color> colors_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// A graph together with the district count k and fairness bound ell.
struct Instance {
  ColoredGraph graph;
  int k = 1;
  std::int64_t ell = 0;

  Instance() = default;
  /// Throws std::invalid_argument unless 1 <= k <= n and ell >= 0.
  Instance(ColoredGraph g, int k_, std::int64_t ell_);
};

/// Partition of the vertices into k districts, stored as a per-vertex
/// district index.  Districts may be empty until checked by
/// verify_districting.
class Districting {
 public:
  Districting() = default;
  Districting(std::vector<int> assignment, int k);

  /// Builds from explicit vertex sets (district i = sets[i]); every vertex of
  /// [0, n) must appear exactly once.
  static Districting from_sets(const std::vector<std::vector<Vertex>>& sets, int n);

  int k() const { return k_; }
  int n() const { return static_cast<int>(assignment_.size()); }
  int district_of(Vertex v) const { return assignment_[v]; }
  std::span<const int> assignment() const { return assignment_; }

  /// Vertex sets per district, each sorted ascending.
  std::vector<std::vector<Vertex>> districts() const;

  /// Relabels districts in order of first occurrence along vertex ids.
  /// Empty districts keep the highest labels.
  Districting canonical() const;

  friend bool operator==(const Districting&, const Districting&) = default;

 private:
  std::vector<int> assignment_;
  int k_ = 0;
};

ColorVector color_vector(const ColoredGraph& graph, std::span<const Vertex> subset);

/// Maximal connected vertex sets of graph[subset], each sorted, ordered by
/// smallest member.
std::vector<std::vector<Vertex>> connected_components(const ColoredGraph& graph,
                                                      std::span<const Vertex> subset);
std::vector<std::vector<Vertex>> connected_components(const ColoredGraph& graph);

bool is_connected_subset(const ColoredGraph& graph, std::span<const Vertex> subset);

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
ColoredGraph induced_subgraph(const ColoredGraph& graph, std::span<const Vertex> vertices);

enum class ViolationKind { kEmpty, kDisconnected, kUnfair };

struct Violation {
  int district = 0;
  ViolationKind kind = ViolationKind::kEmpty;
  std::int64_t mov = 0;  // set for kUnfair
};

struct Verdict {
  std::optional<Violation> violation;
  bool valid() const { return !violation.has_value(); }
  std::string describe() const;
};

/// Checks every district in index order for non-emptiness, connectivity and
/// ell-fairness; reports the first failure.  Throws std::invalid_argument if
/// the districting dimensions do not match the instance.
Verdict verify_districting(const Instance& instance, const Districting& d);

std::string to_string(ViolationKind kind);

}  // namespace fcd
