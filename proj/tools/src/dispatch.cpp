#include "fcd/cli/dispatch.hpp"

#include <array>
#include <stdexcept>
#include <utility>

#include "fcd/oracle.hpp"
#include "fcd/solver_mln.hpp"
#include "fcd/solver_param.hpp"
#include "fcd/solver_tw.hpp"
#include "fcd/solvers_poly.hpp"

namespace fcd::cli {

namespace {

constexpr std::array<std::pair<Algorithm, const char*>, 12> kNames{{
    {Algorithm::kAuto, "auto"},
    {Algorithm::kPath, "path"},
    {Algorithm::kCycle, "cycle"},
    {Algorithm::kStar, "star"},
    {Algorithm::kCaterpillar, "caterpillar"},
    {Algorithm::kMln, "mln"},
    {Algorithm::kTreewidth, "treewidth"},
    {Algorithm::kFenK, "fen-k"},
    {Algorithm::kVc, "vc"},
    {Algorithm::kVcColors, "vc-colors"},
    {Algorithm::kDeg2, "deg2"},
    {Algorithm::kBrute, "brute"},
}};

std::vector<Vertex> require_spine(const StructureReport& r, GraphClass want, const char* name) {
  if (r.class_tag != want || !r.spine) throw std::invalid_argument(std::string("graph is not a ") + name);
  return *r.spine;
}

}  // namespace

std::string to_string(Algorithm a) {
  for (const auto& [alg, name] : kNames)
    if (alg == a) return name;
  return "unknown";
}

Algorithm parse_algorithm(const std::string& name) {
  for (const auto& [alg, n] : kNames)
    if (name == n) return alg;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

std::optional<Algorithm> dispatch_auto(const Instance& instance, bool has_td,
                                       const DispatchLimits& limits) {
  const auto& g = instance.graph;
  const StructureReport r = classify_graph(g);
  switch (r.class_tag) {
    case GraphClass::kPath: return Algorithm::kPath;
    case GraphClass::kCycle: return Algorithm::kCycle;
    case GraphClass::kStar: return Algorithm::kStar;
    case GraphClass::kCaterpillar: return Algorithm::kCaterpillar;
    default: break;
  }
  const bool forest = r.class_tag == GraphClass::kTree || r.class_tag == GraphClass::kForest;
  if (forest || has_td) {
    if (g.num_colors() <= limits.small_colors) return Algorithm::kTreewidth;
    if (forest && instance.k <= limits.small_k) return Algorithm::kFenK;
  }
  if (r.is_connected &&
      static_cast<int>(branch_decomposition(g).branches.size()) <= limits.max_branches)
    return Algorithm::kMln;
  try {
    WorkBudget probe(1'000'000);
    minimum_vertex_cover(g, limits.max_cover, &probe);
    return Algorithm::kVc;
  } catch (const BudgetExceeded&) {
  }
  if (r.degree_ge2_count <= limits.max_deg2) return Algorithm::kDeg2;
  if (g.n() <= limits.max_brute) return Algorithm::kBrute;
  return std::nullopt;
}

RunOutcome run_algorithm(Algorithm algorithm, const Instance& instance,
                         const std::optional<TreeDecomposition>& td, WorkBudget& budget) {
  const auto& g = instance.graph;
  RunOutcome out;
  if (algorithm == Algorithm::kAuto) {
    const auto chosen = dispatch_auto(instance, td.has_value());
    if (!chosen) throw BudgetExceeded("no algorithm applies within the automatic limits");
    algorithm = *chosen;
  }
  out.algorithm = algorithm;
  switch (algorithm) {
    case Algorithm::kAuto: break;
    case Algorithm::kPath:
      out.result = solve_path(instance, require_spine(classify_graph(g), GraphClass::kPath, "path"));
      break;
    case Algorithm::kCycle:
      out.result = solve_cycle(instance, require_spine(classify_graph(g), GraphClass::kCycle, "cycle"));
      break;
    case Algorithm::kStar: out.result = solve_star(instance); break;
    case Algorithm::kCaterpillar: {
      const StructureReport r = classify_graph(g);
      std::vector<Vertex> spine;
      if (r.class_tag == GraphClass::kPath || r.class_tag == GraphClass::kStar ||
          r.class_tag == GraphClass::kCaterpillar)
        spine = *r.spine;
      else if (g.n() == 1)
        spine = {0};
      else
        throw std::invalid_argument("graph is not a caterpillar");
      out.result = solve_caterpillar(instance, spine);
      break;
    }
    case Algorithm::kMln:
      out.result = solve_mln(instance, branch_decomposition(g), &budget);
      break;
    case Algorithm::kTreewidth: {
      TreewidthOptions opt;
      opt.budget = &budget;
      out.result = solve_treewidth(instance, nice_tree_decomposition(g, td), opt);
      break;
    }
    case Algorithm::kFenK:
      out.result = solve_fen_k(instance, feedback_edge_set(g), &budget);
      break;
    case Algorithm::kVc:
      out.result = solve_vc(instance, minimum_vertex_cover(g, g.n(), &budget), &budget);
      break;
    case Algorithm::kVcColors:
      out.result = solve_vc_colors(instance, minimum_vertex_cover(g, g.n(), &budget), &budget);
      break;
    case Algorithm::kDeg2: out.result = solve_degree_two(instance, &budget); break;
    case Algorithm::kBrute: out.result = brute_force_solve(instance); break;
  }
  return out;
}

}  // namespace fcd::cli
