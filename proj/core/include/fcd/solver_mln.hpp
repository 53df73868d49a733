#pragma once

#include <cstdint>

#include "fcd/budget.hpp"
#include "fcd/classify.hpp"
#include "fcd/graph.hpp"

namespace fcd {

struct MlnStats {
  std::uint64_t guesses = 0;  // (partition, cut) combinations examined
};

/// Guesses how the branch endpoints are grouped into districts and where
/// each branch is cut; districts without an endpoint are segments of branch
/// interiors and are handled by the path table.  Graphs that are a single
/// path or cycle go to the dedicated solvers.  Decision only.  Throws
/// std::invalid_argument for disconnected graphs.
SolveResult solve_mln(const Instance& instance, const BranchDecomposition& bd,
                      WorkBudget* budget = nullptr, MlnStats* stats = nullptr);

}  // namespace fcd
