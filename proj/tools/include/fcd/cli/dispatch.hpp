#pragma once

#include <optional>
#include <string>

#include "fcd/budget.hpp"
#include "fcd/classify.hpp"
#include "fcd/graph.hpp"

namespace fcd::cli {

enum class Algorithm {
  kAuto,
  kPath,
  kCycle,
  kStar,
  kCaterpillar,
  kMln,
  kTreewidth,
  kFenK,
  kVc,
  kVcColors,
  kDeg2,
  kBrute,
};

std::string to_string(Algorithm a);
/// auto, path, cycle, star, caterpillar, mln, treewidth, fen-k, vc,
/// vc-colors, deg2, brute.  Throws std::invalid_argument otherwise.
Algorithm parse_algorithm(const std::string& name);

/// Thresholds of the automatic ladder.
struct DispatchLimits {
  int small_colors = 4;
  int small_k = 4;
  int max_branches = 6;
  int max_cover = 4;
  int max_deg2 = 8;
  int max_brute = 12;
};

/// First rung that applies: path, cycle, star, caterpillar; for forests (or
/// any graph with a supplied decomposition) treewidth when few colors, else
/// fen-k when k is small; mln when the graph has few branches; vc when the
/// cover is small; deg2 when few vertices have degree two or more; brute
/// when the graph is small.  nullopt when nothing applies.
std::optional<Algorithm> dispatch_auto(const Instance& instance, bool has_td = false,
                                       const DispatchLimits& limits = {});

struct RunOutcome {
  Algorithm algorithm = Algorithm::kAuto;
  SolveResult result;
};

/// Runs `algorithm` (kAuto resolves through dispatch_auto first).  Throws
/// std::invalid_argument when the graph does not fit the algorithm and
/// BudgetExceeded when undecided.
RunOutcome run_algorithm(Algorithm algorithm, const Instance& instance,
                         const std::optional<TreeDecomposition>& td, WorkBudget& budget);

}  // namespace fcd::cli
