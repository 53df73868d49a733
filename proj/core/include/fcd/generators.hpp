#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fcd/graph.hpp"

namespace fcd {

/// Uniform integer in [0, bound) by rejection sampling; identical on every
/// platform, unlike std::uniform_int_distribution.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
int uniform_int(std::mt19937_64& rng, int lo, int hi);  // inclusive

struct GeneratorClass {
  enum Kind { kPath, kCycle, kStar, kCaterpillar, kTree, kUnicyclic, kBoundedVc, kGeneral };
  Kind kind = kPath;
  int vc_bound = 0;             // kBoundedVc
  double edge_probability = 0;  // kGeneral

  static GeneratorClass bounded_vc(int b) { return {kBoundedVc, b, 0}; }
  static GeneratorClass general(double p) { return {kGeneral, 0, p}; }
};

/// Accepts path, cycle, star, caterpillar, tree, unicyclic, bounded_vc(B),
/// general(P).
GeneratorClass parse_generator_class(const std::string& text);
std::string to_string(const GeneratorClass& cls);

/// Random connected instance of the given class with uniformly random colors
/// and random vertex labels.  Minimum sizes: cycle 3, star 4, unicyclic 4,
/// caterpillar 5, tree 7.  general(p) is a random spanning tree plus every
/// other pair with probability p.  bounded_vc(b) has a vertex cover of size
/// at most b.  Throws std::invalid_argument for impossible requests.
Instance gen_random_instance(const GeneratorClass& cls, int n, int num_colors, int k,
                             std::int64_t ell, std::uint64_t seed);

// Building blocks, all unlabeled-random edge lists on vertices 0..n-1.
std::vector<Edge> random_tree_edges(int n, std::mt19937_64& rng);
std::vector<Edge> random_caterpillar_edges(int n, std::mt19937_64& rng);
std::vector<Edge> random_unicyclic_edges(int n, std::mt19937_64& rng);
std::vector<Edge> random_bounded_vc_edges(int n, int b, std::mt19937_64& rng);
std::vector<Edge> random_connected_edges(int n, double p, std::mt19937_64& rng);
std::vector<Edge> relabel_edges(const std::vector<Edge>& edges, const std::vector<int>& perm);
std::vector<int> random_permutation(int n, std::mt19937_64& rng);

/// Grid Tiling: t x t cells, each holding n distinct tiles from
/// [1, m] x [1, m]; in every cell the first entries sum to the same X and
/// the second entries to the same Y.  Cells are stored row-major, 1-based
/// (i, j) at index (i-1)*t + (j-1).
struct GridTilingInstance {
  int t = 0;
  int m = 0;
  int n = 0;
  std::vector<std::vector<std::pair<int, int>>> cells;

  const std::vector<std::pair<int, int>>& cell(int i, int j) const {
    return cells[static_cast<std::size_t>((i - 1) * t + (j - 1))];
  }
  /// Throws std::invalid_argument describing the first violated rule.
  void validate() const;
  /// A selection (one tile per cell, row-major) is a solution if
  /// horizontally adjacent cells agree on the second entry and vertically
  /// adjacent cells on the first, indices wrapping around.
  bool is_solution(const std::vector<std::pair<int, int>>& selection) const;
};

struct GridTilingReduction {
  static constexpr Color kColorC = 0;
  static constexpr Color kColorCPrime = 1;
  static constexpr Color kColorCStar = 2;

  Instance instance;
  GridTilingInstance source;
  std::int64_t W = 0;
  std::int64_t Z = 0;
  Vertex center = 0;
  // star_ranges[cell][tile] = [begin, end) of the star's vertex ids; the
  // star center is `begin`.
  std::vector<std::vector<std::pair<Vertex, Vertex>>> star_ranges;

  Color color_b(int i, int j) const { return 3 + 3 * ((i - 1) * source.t + (j - 1)); }
  Color color_d(int i, int j) const { return color_b(i, j) + 1; }
  Color color_c(int i, int j) const { return color_b(i, j) + 2; }
  std::int64_t f(int i, int j) const { return static_cast<std::int64_t>(i) * source.t + j; }
  std::int64_t g(int i, int j) const {
    return static_cast<std::int64_t>(source.t) * source.t + source.t + f(i, j);
  }

  /// Each selected star becomes its own district; everything else joins the
  /// center district.  Throws if a selected tile is not in its cell.
  Districting witness(const std::vector<std::pair<int, int>>& selection) const;
};

GridTilingReduction reduce_grid_tiling(const GridTilingInstance& gt);

/// Not-all-equal 3-SAT: literals are signed 1-based variable indices.
struct NaeInstance {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;

  void validate() const;
  bool is_solution(const std::vector<bool>& assignment) const;  // assignment[i-1]
};

struct NaeReduction {
  static constexpr Color kColorC = 0;
  static constexpr Color kColorCPrime = 1;
  static constexpr Color kColorCDoublePrime = 2;
  static constexpr Vertex kCentral1 = 0;
  static constexpr Vertex kCentral2 = 1;

  Instance instance;
  NaeInstance source;
  std::int64_t Z = 0;

  Color color_var(int i) const { return 3 + (i - 1); }
  Color color_clause(int j) const { return 3 + source.num_vars + (j - 1); }
  Vertex literal_vertex(int literal) const {
    const int i = literal > 0 ? literal : -literal;
    return 2 + 2 * (i - 1) + (literal > 0 ? 0 : 1);
  }

  /// V1: the first central vertex, the literal vertices made true, and all
  /// leaves hanging off them; V2: everything else.
  Districting witness(const std::vector<bool>& assignment) const;
};

NaeReduction reduce_nae3sat(const NaeInstance& sat);

/// Colors the n input vertices 0 and adds n color-1 leaves, half on v and
/// half on v2; k = 2, ell = 0.
Instance reduce_pbcp(int n, const std::vector<Edge>& edges, Vertex v, Vertex v2);

}  // namespace fcd
