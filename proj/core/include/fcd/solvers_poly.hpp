#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fcd/budget.hpp"
#include "fcd/graph.hpp"

namespace fcd {

/// Range of district counts k for which a star-like graph (a center set X
/// that stays together plus pendant leaves Y) admits a fair districting.
struct StarInterval {
  bool feasible = false;
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  bool contains(std::int64_t k) const { return feasible && lo <= k && k <= hi; }
};

/// x_counts: colors of the center (may be weighted); y_counts: colors of
/// the leaves, each leaf either joins the center district or stays alone.
StarInterval star_interval(const ColorVector& x_counts, const ColorVector& y_counts,
                           std::int64_t ell);
StarInterval star_interval(const ColorVector& x_counts, std::span<const Color> y_colors,
                           std::int64_t ell);

/// Per-color number of leaves joining the center so that the remaining
/// leaves form k-1 singleton districts and every district is ell-fair, or
/// nullopt.
std::optional<ColorVector> star_center_fill(const ColorVector& x_counts,
                                            const ColorVector& y_counts, std::int64_t k,
                                            std::int64_t ell);

/// Fairness of every contiguous segment of a vertex sequence:
/// fair(i, j) for i <= j.
class SegmentFairness {
 public:
  SegmentFairness(const ColoredGraph& graph, std::span<const Vertex> order, std::int64_t ell);
  bool fair(int i, int j) const { return bits_[static_cast<std::size_t>(i) * n_ + j]; }
  int size() const { return n_; }

 private:
  int n_;
  std::vector<bool> bits_;
};

/// T[i][t]: the first i vertices of the sequence split into t fair segments.
class FeasibilityTable {
 public:
  FeasibilityTable(const SegmentFairness& fairness, int max_k);
  bool at(int prefix, int t) const { return cells_[prefix][t]; }
  int max_k() const { return max_k_; }
  /// Segment boundaries of a leftmost-split decomposition of the full
  /// sequence into t segments; empty if infeasible.
  std::vector<int> backtrace(int t) const;
  std::uint64_t work() const { return work_; }

 private:
  const SegmentFairness& fairness_;
  int max_k_;
  std::vector<std::vector<char>> cells_;
  std::uint64_t work_ = 0;
};

/// `order` must be a Hamiltonian path of a path graph.
SolveResult solve_path(const Instance& instance, std::span<const Vertex> order);

/// `order` must be the cyclic order of a cycle graph.
SolveResult solve_cycle(const Instance& instance, std::span<const Vertex> order);

SolveResult solve_star(const Instance& instance);

/// `spine`: path of the non-leaf vertices; every other vertex is a leaf
/// hanging off the spine.  Also returns a witness.
SolveResult solve_caterpillar(const Instance& instance, std::span<const Vertex> spine);

/// H[t] for t in [0, max_k]: the path splits into t fair districts.
std::vector<bool> path_feasible_counts(const ColoredGraph& graph, std::span<const Vertex> order,
                                       std::int64_t ell, int max_k);

/// H[t] for t in [0, max_k]: the caterpillar splits into t fair districts.
std::vector<bool> caterpillar_feasible_counts(const ColoredGraph& graph,
                                              std::span<const Vertex> spine, std::int64_t ell,
                                              int max_k);

/// Distributes k districts over components; component i can take j
/// districts iff tables[i][j].  Returns the chosen counts, or nullopt.
std::optional<std::vector<int>> solve_disjoint_union(const std::vector<std::vector<bool>>& tables,
                                                     int k);

/// Disjoint union of caterpillars (paths, stars and isolated vertices
/// included).  Throws std::invalid_argument otherwise.
SolveResult solve_pathwidth_one(const Instance& instance);

}  // namespace fcd
