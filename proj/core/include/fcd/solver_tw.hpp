#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fcd/budget.hpp"
#include "fcd/classify.hpp"
#include "fcd/graph.hpp"

namespace fcd {

/// One row of the table at a nice-decomposition node.  Positions refer to
/// the sorted bag.  pb groups bag vertices by district, ppb by connected
/// piece of that district inside the processed subgraph (a refinement of
/// pb); both are restricted growth strings.  cc[b] counts the colors of
/// district block b over every processed vertex; k_done counts districts
/// already closed off (disjoint from the bag, connected and fair).
struct TwState {
  std::vector<std::uint8_t> pb;
  std::vector<std::uint8_t> ppb;
  std::vector<ColorVector> cc;
  int k_done = 0;

  int blocks() const { return static_cast<int>(cc.size()); }
  friend bool operator==(const TwState&, const TwState&) = default;
};

struct TreewidthOptions {
  std::size_t max_states = 10'000'000;  // per node table
  bool check_invariants = false;
  WorkBudget* budget = nullptr;
};

struct TreewidthStats {
  std::uint64_t states_generated = 0;
  std::size_t largest_table = 0;
};

/// Decision only.  Throws InvalidDecomposition for a malformed ntd and
/// BudgetExceeded when a table outgrows options.max_states.
SolveResult solve_treewidth(const Instance& instance, const NiceTreeDecomposition& ntd,
                            const TreewidthOptions& options = {},
                            TreewidthStats* stats = nullptr);

/// Throws std::logic_error naming the first broken state invariant.
void check_tw_state(const ColoredGraph& graph, const std::vector<Vertex>& bag,
                    const TwState& state, int k);

}  // namespace fcd
