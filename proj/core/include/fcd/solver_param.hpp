#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "fcd/budget.hpp"
#include "fcd/graph.hpp"

namespace fcd {

/// Tries every set of at most |fes|+k-1 edges as the cut between districts.
/// Throws std::invalid_argument if `fes` is not a feedback edge set and
/// BudgetExceeded if the number of candidate cuts exceeds the budget.
SolveResult solve_fen_k(const Instance& instance, const std::vector<Edge>& fes,
                        WorkBudget* budget = nullptr);

struct WeightedEdge {
  int left = 0;
  int right = 0;
  std::int64_t weight = 0;
};

struct Matching {
  std::int64_t weight = 0;
  std::vector<std::pair<int, int>> pairs;  // (left, right), sorted by left
};

/// Maximum total weight matching (Hungarian method, vertices may stay
/// unmatched).  Weights must be positive.
Matching max_weight_bipartite_matching(int left_size, int right_size,
                                       const std::vector<WeightedEdge>& edges);

struct VcStats {
  std::uint64_t guesses = 0;         // complete guesses reaching the final check
  std::uint64_t matchings = 0;       // matching instances solved (solve_vc)
  std::uint64_t system_states = 0;   // integer-system search states (solve_vc_colors)
};

/// Guesses the districts meeting the cover, their connectors, top two colors
/// and counts, then distributes the rest by weighted matching.  Decision
/// only.  Throws std::invalid_argument if `cover` is not a vertex cover.
SolveResult solve_vc(const Instance& instance, const std::vector<Vertex>& cover,
                     WorkBudget* budget = nullptr, VcStats* stats = nullptr);

/// Same guesses over vertex types (color, neighborhood) and an integer
/// feasibility system solved by exhaustive search per color.  Decision only.
SolveResult solve_vc_colors(const Instance& instance, const std::vector<Vertex>& cover,
                            WorkBudget* budget = nullptr, VcStats* stats = nullptr);

/// Partitions the vertices of degree >= 2 of every component into connected
/// blocks and sizes each block's leaves with the star interval.  Decision
/// only.
SolveResult solve_degree_two(const Instance& instance, WorkBudget* budget = nullptr);

/// H[j] for j in [0, max_k] for a connected graph, as used by
/// solve_degree_two.
std::vector<bool> degree_two_feasible_counts(const ColoredGraph& component, std::int64_t ell,
                                             int max_k, WorkBudget* budget = nullptr);

}  // namespace fcd
