#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fcd/classify.hpp"
#include "fcd/generators.hpp"
#include "fcd/graph.hpp"

namespace fcd::cli {

/// Malformed input.  line() is 1-based, 0 when the problem is not tied to a
/// single line (missing lines, inconsistent totals).
class FormatError : public std::invalid_argument {
 public:
  FormatError(int line, const std::string& reason)
      : std::invalid_argument(line > 0 ? "line " + std::to_string(line) + ": " + reason : reason),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ParsedInstance {
  Instance instance;
  std::optional<TreeDecomposition> td;
};

/// Instance file:
///   p fcd <n> <m> <num_colors> <k> <ell>
///   c <vertex> <color>        (n lines)
///   e <u> <v>                 (m lines, u < v)
///   td <width> <num_nodes>    (optional)
///   b <id> <parent|-1> <v...> (num_nodes lines)
/// Lines starting with '#' and blank lines are ignored.
ParsedInstance parse_instance(std::string_view text);

/// Canonical form: header, colors by vertex, edges sorted, bags sorted.
std::string write_instance(const Instance& instance, const TreeDecomposition* td = nullptr);

/// Solution file: `s fcd <k>` then one `d <id> <v...>` line per district.
/// Districts may be empty; every vertex of [0, n) must appear once.
Districting parse_solution(std::string_view text, int n);
std::string write_solution(const Districting& d);

/// grid <t> <m> <n>
/// tile <i> <j> <x> <y>        (n per cell, 1-based)
/// select <i> <j> <x> <y>      (optional, one per cell)
struct GridTilingBlock {
  GridTilingInstance instance;
  std::optional<std::vector<std::pair<int, int>>> selection;
};
GridTilingBlock parse_grid_tiling(std::string_view text);

/// nae <num_vars> <num_clauses>
/// clause <l1> <l2> <l3>       (signed 1-based literals)
/// assign <b1> ... <bn>        (optional, 0/1 per variable)
struct NaeBlock {
  NaeInstance instance;
  std::optional<std::vector<bool>> assignment;
};
NaeBlock parse_nae(std::string_view text);

/// pbcp <n> <m> <v> <v2>
/// e <u> <w>                   (m lines)
struct PbcpBlock {
  int n = 0;
  std::vector<Edge> edges;
  Vertex v = 0;
  Vertex v2 = 0;
};
PbcpBlock parse_pbcp(std::string_view text);

}  // namespace fcd::cli
