#pragma once

#include <functional>
#include <vector>

#include "fcd/budget.hpp"
#include "fcd/graph.hpp"

namespace fcd {

inline constexpr int kDefaultOracleCap = 12;

/// Calls `visit` once for every partition of the vertices into exactly k
/// non-empty connected districts, labeled by first occurrence.  Stops early
/// when `visit` returns false.  Throws BudgetExceeded if n > cap.
void enumerate_connected_partitions(const ColoredGraph& graph, int k,
                                    const std::function<bool(const Districting&)>& visit,
                                    int cap = kDefaultOracleCap);

std::vector<Districting> connected_partitions(const ColoredGraph& graph, int k,
                                              int cap = kDefaultOracleCap);

/// First fair partition in enumeration order.  `work` counts the partitions
/// inspected.
SolveResult brute_force_solve(const Instance& instance, int cap = kDefaultOracleCap);

}  // namespace fcd
